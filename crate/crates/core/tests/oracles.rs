//! Cross-checks against independent computations, and property tests of the invariants.

use proptest::prelude::*;

use rlie::catalog::{self, CatalogKind};
use rlie::criterion::{self, AuditMode};
use rlie::gfp::poly::minimal_polynomial;
use rlie::gfp::{FpVector, Matrix, PrimeField, Subspace};
use rlie::rla::RestrictedLieAlgebra;
use rlie::uenv::EnvAlgebra;
use rlie::Limits;

fn f(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn abelian(p: u32, rows: &[Vec<u8>]) -> RestrictedLieAlgebra {
    let d = rows.len();
    RestrictedLieAlgebra::new(
        f(p),
        (0..d).map(|i| format!("e{i}")).collect(),
        Vec::new(),
        rows.iter()
            .map(|r| FpVector::from_entries(f(p), r))
            .collect(),
    )
    .unwrap()
}

/// Every abelian algebra with `p^(d^2) <= 512`; all of them are valid.
fn all_abelian() -> Vec<RestrictedLieAlgebra> {
    let mut out = Vec::new();
    for (p, d) in [(2u32, 1usize), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)] {
        let n = (p as u64).pow((d * d) as u32);
        for idx in 0..n {
            let e = FpVector::from_index(f(p), d * d, idx).entries();
            let rows: Vec<Vec<u8>> = e.chunks(d).map(|c| c.to_vec()).collect();
            out.push(abelian(p, &rows));
        }
    }
    out
}

/// `x^[p]` computed by Jacobson's formula agrees with `x^p` computed by straightening in
/// `u(L)`, for every element of a spread of algebras.
#[test]
fn pth_power_matches_enveloping_power() {
    let mut algebras: Vec<RestrictedLieAlgebra> = Vec::new();
    for p in [2, 3, 5] {
        algebras.extend(
            catalog::standard_family(p, 3)
                .unwrap()
                .into_iter()
                .map(|(_, l)| l),
        );
    }
    algebras.extend(
        criterion::enumerate_algebras(2, 3, AuditMode::Sampled { size: 30, seed: 7 }, 1 << 16)
            .unwrap(),
    );
    algebras.extend(criterion::enumerate_algebras(3, 2, AuditMode::Exhaustive, 1 << 16).unwrap());
    for l in &algebras {
        let a = EnvAlgebra::build(l, 1 << 10).unwrap();
        for x in l.full().elements() {
            let lhs = a.embed_lie(&l.pth_power(&x));
            let rhs = a.power(&a.embed_lie(&x), l.p() as u64);
            assert_eq!(lhs, rhs, "x = {x:?} in {l:?}");
        }
    }
}

/// For abelian algebras `<x>_p` is the span of `x, x^[p], x^[p]^2, ...`; cyclicity by the
/// minimal-polynomial route must match a scan over every `x`.
#[test]
fn abelian_cyclicity_matches_exhaustive_scan() {
    for l in all_abelian() {
        let krylov = |x: &FpVector| {
            let mut rows = vec![x.clone()];
            for _ in 0..l.dim() {
                let next = l.pth_power(rows.last().unwrap());
                rows.push(next);
            }
            Subspace::rref(l.field(), l.dim(), rows).unwrap().dim()
        };
        let nil = |x: &FpVector| l.iterated_pth_power(x, l.dim()).is_zero();
        let scan_cyclic = l.full().elements().any(|x| krylov(&x) == l.dim());
        let scan_nil = l
            .full()
            .elements()
            .any(|x| nil(&x) && krylov(&x) == l.dim());
        let c = l.is_cyclic(1 << 16).unwrap();
        assert_eq!(c.cyclic, scan_cyclic, "{l:?}");
        if let Some(g) = &c.generator {
            assert_eq!(krylov(g), l.dim());
        }
        let n = l.is_nilcyclic(1 << 16).unwrap();
        assert_eq!(n.cyclic, scan_nil, "{l:?}");
        if let Some(g) = &n.generator {
            assert!(nil(g) && krylov(g) == l.dim());
        }
        let torus_scan = l.pmap_matrix().rank() == l.dim();
        assert_eq!(l.is_torus(), torus_scan);
    }
}

/// Two-dimensional algebras over F_2 have no Jacobi triples, so validity reduces to
/// `ad(P_i) = (ad e_i)^2`. Count those by hand with 2x2 matrices.
#[test]
fn valid_two_dimensional_count_over_f2() {
    let mut count = 0;
    for idx in 0..64u32 {
        let bit = |k: u32| ((idx >> (5 - k)) & 1) as u8;
        let v = [bit(0), bit(1)]; // [x, y] = v0 x + v1 y
        let pm = [[bit(2), bit(3)], [bit(4), bit(5)]];
        // ad x: x -> 0, y -> v; ad y: x -> v (sign irrelevant in char 2), y -> 0.
        // Columns are images of x and y.
        let ad = |a: u8, b: u8| -> [[u8; 2]; 2] {
            // ad(a x + b y): x -> b [y, x] = b v, y -> a v.
            [[b & v[0], a & v[0]], [b & v[1], a & v[1]]]
        };
        let sq = |m: [[u8; 2]; 2]| -> [[u8; 2]; 2] {
            let mut out = [[0u8; 2]; 2];
            for (i, row) in out.iter_mut().enumerate() {
                for (j, o) in row.iter_mut().enumerate() {
                    *o = (m[i][0] & m[0][j]) ^ (m[i][1] & m[1][j]);
                }
            }
            out
        };
        let ok = ad(pm[0][0], pm[0][1]) == sq(ad(1, 0)) && ad(pm[1][0], pm[1][1]) == sq(ad(0, 1));
        count += ok as usize;
    }
    let enumerated = criterion::enumerate_algebras(2, 2, AuditMode::Exhaustive, 1 << 16).unwrap();
    assert_eq!(count, 19);
    assert_eq!(enumerated.len(), 19);
}

#[test]
fn omega_powers_descend_strictly_for_one_dimensional_nontorus() {
    for p in [2, 3, 5, 7] {
        let l = catalog::make(CatalogKind::Nilcyclic(1), p).unwrap();
        let a = EnvAlgebra::build(&l, 16).unwrap();
        let dims: Vec<usize> = (1..=p as usize + 1)
            .map(|n| a.omega_power(n).dim())
            .collect();
        let expect: Vec<usize> = (1..=p as usize + 1)
            .map(|n| (p as usize).saturating_sub(n))
            .collect();
        assert_eq!(dims, expect, "p = {p}");
    }
}

#[test]
fn mixed_catalog_matches_brute() {
    let lim = Limits::default();
    for (a, b) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        let l = catalog::make(CatalogKind::Mixed(a, b), 2).unwrap();
        let s = criterion::structural_decision(&l, &lim).unwrap();
        let br = criterion::brute_decision(&l, &lim).unwrap();
        assert!(s.is_pir && br.is_pir, "mixed({a},{b})");
    }
}

fn vectors(
    p: u32,
    len: usize,
    count: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = Vec<FpVector>> {
    prop::collection::vec(prop::collection::vec(0..p as u8, len), count).prop_map(move |rows| {
        rows.iter()
            .map(|r| FpVector::from_entries(f(p), r))
            .collect()
    })
}

fn prime() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 5, 7])
}

proptest! {
    #[test]
    fn subspace_dimension_formula((p, us, ws) in prime().prop_flat_map(|p| (Just(p), vectors(p, 6, 0..=5), vectors(p, 6, 0..=5)))) {
        let u = Subspace::rref(f(p), 6, us).unwrap();
        let w = Subspace::rref(f(p), 6, ws).unwrap();
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        for b in meet.basis() {
            prop_assert!(u.contains(b) && w.contains(b));
        }
        prop_assert!(sum.contains_subspace(&u) && sum.contains_subspace(&w));
    }

    #[test]
    fn minimal_polynomial_annihilates((p, rows) in prime().prop_flat_map(|p| (Just(p), vectors(p, 4, 4..=4)))) {
        let m = Matrix::from_rows(f(p), 4, rows).unwrap();
        let q = minimal_polynomial(&m);
        prop_assert!(q.degree().unwrap() <= 4);
        prop_assert!(q.eval_matrix(&m).is_zero());
    }

    #[test]
    fn kernel_is_annihilated((p, rows) in prime().prop_flat_map(|p| (Just(p), vectors(p, 5, 1..=3)))) {
        let n = rows.len();
        let m = Matrix::from_rows(f(p), 5, rows).unwrap();
        let k = m.kernel();
        prop_assert_eq!(k.dim() + m.rank(), 5);
        for b in k.basis() {
            prop_assert!(m.apply(b).is_zero());
        }
        prop_assert_eq!(m.image().ambient_dim(), n);
    }

    #[test]
    fn enveloping_product_is_associative(seed in any::<u64>(), xs in prop::collection::vec(0u64..256, 3)) {
        let ls = criterion::enumerate_algebras(2, 3, AuditMode::Sampled { size: 1, seed }, 1 << 16).unwrap();
        let a = EnvAlgebra::build(&ls[0], 64).unwrap();
        let v: Vec<FpVector> = xs.iter().map(|&i| FpVector::from_index(f(2), 8, i)).collect();
        prop_assert_eq!(a.mul(&a.mul(&v[0], &v[1]), &v[2]), a.mul(&v[0], &a.mul(&v[1], &v[2])));
        // The bracket of Lie elements is the commutator in u(L).
        let x = FpVector::from_index(f(2), 3, xs[0] % 8);
        let y = FpVector::from_index(f(2), 3, xs[1] % 8);
        let (ex, ey) = (a.embed_lie(&x), a.embed_lie(&y));
        let mut comm = a.mul(&ex, &ey);
        comm.sub_assign(&a.mul(&ey, &ex));
        prop_assert_eq!(comm, a.embed_lie(&ls[0].bracket(&x, &y)));
    }

    #[test]
    fn pmap_is_linear_on_abelian_algebras(p in prop::sample::select(vec![2u32, 3]), idx in 0u64..81, x in 0u64..9, y in 0u64..9) {
        let d = 2;
        let e = FpVector::from_index(f(p), d * d, idx % (p as u64).pow(4)).entries();
        let rows: Vec<Vec<u8>> = e.chunks(d).map(|c| c.to_vec()).collect();
        let l = abelian(p, &rows);
        let (x, y) = (FpVector::from_index(f(p), d, x % (p as u64).pow(2)), FpVector::from_index(f(p), d, y % (p as u64).pow(2)));
        let mut s = x.clone();
        s.add_assign(&y);
        let mut rhs = l.pth_power(&x);
        rhs.add_assign(&l.pth_power(&y));
        prop_assert_eq!(l.pth_power(&s), rhs);
    }
}
