//! Text and JSON renderings of vectors, subspaces and verdicts.

use serde_json::{json, Value};

use crate::criterion::{Certificate, PirVerdict};
use crate::gfp::{FpVector, Subspace};
use crate::ideals::SideVerdict;
use crate::rla::RestrictedLieAlgebra;
use crate::uenv::EnvAlgebra;

fn combination(terms: impl Iterator<Item = (u8, String)>) -> String {
    let parts: Vec<String> = terms
        .map(|(c, name)| if c == 1 { name } else { format!("{c} {name}") })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// `x + 2 y` style rendering of an element of `L`.
pub fn lie_text(l: &RestrictedLieAlgebra, v: &FpVector) -> String {
    combination(v.nonzero().map(|(i, c)| (c, l.names()[i].clone())))
}

/// Rendering of an element of `u(L)` in the PBW basis.
pub fn env_text(a: &EnvAlgebra, v: &FpVector) -> String {
    combination(v.nonzero().map(|(i, c)| (c, a.monomial_name(i))))
}

pub fn coords(v: &FpVector) -> Value {
    json!(v.entries())
}

pub fn subspace(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis().iter().map(coords).collect::<Vec<_>>(),
    })
}

pub fn lie_basis_text(l: &RestrictedLieAlgebra, s: &Subspace) -> String {
    let rows: Vec<String> = s.basis().iter().map(|b| lie_text(l, b)).collect();
    format!("<{}>", rows.join(", "))
}

pub fn env_basis_text(a: &EnvAlgebra, s: &Subspace) -> String {
    let rows: Vec<String> = s.basis().iter().map(|b| env_text(a, b)).collect();
    format!("<{}>", rows.join(", "))
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn side_json(v: &SideVerdict) -> Value {
    json!({
        "side": v.side.name(),
        "principal": v.principal,
        "ideal_count": v.ideal_count,
        "principal_count": v.principal_count,
        "complete": v.complete,
        "non_principal_witness": v.witness.as_ref().map(subspace),
    })
}

pub fn verdict_json(l: &RestrictedLieAlgebra, v: &PirVerdict) -> Value {
    let certificate = match &v.certificate {
        Certificate::NonAbelian { left, right } => json!({
            "kind": "non_abelian",
            "pair": [l.names()[*left], l.names()[*right]],
            "bracket": coords(l.basis_bracket(*left, *right)),
        }),
        Certificate::Fitting {
            torus,
            nil_part,
            generator,
        } => json!({
            "kind": "fitting",
            "torus_ideal": subspace(torus),
            "nil_part": subspace(nil_part),
            "nilcyclic_generator": generator.as_ref().map(coords),
        }),
        Certificate::Brute { right, left } => json!({
            "kind": "lattice",
            "right": side_json(right),
            "left": side_json(left),
        }),
    };
    json!({
        "method": v.method.name(),
        "is_pir": v.is_pir,
        "certificate": certificate,
    })
}

fn side_text(a: Option<&EnvAlgebra>, v: &SideVerdict) -> String {
    let mut s = format!(
        "  {} ideals: {} total, {} principal{}",
        v.side.name(),
        v.ideal_count,
        v.principal_count,
        if v.complete {
            ""
        } else {
            " (lattice incomplete)"
        }
    );
    if let (Some(w), Some(a)) = (&v.witness, a) {
        s.push_str(&format!("\n    non-principal: {}", env_basis_text(a, w)));
    }
    s
}

pub fn verdict_text(l: &RestrictedLieAlgebra, a: Option<&EnvAlgebra>, v: &PirVerdict) -> String {
    let mut out = format!(
        "{}: u(L) is a principal ideal ring: {}",
        v.method.name(),
        yes_no(v.is_pir)
    );
    match &v.certificate {
        Certificate::NonAbelian { left, right } => out.push_str(&format!(
            "\n  L is not abelian: [{}, {}] = {}",
            l.names()[*left],
            l.names()[*right],
            lie_text(l, l.basis_bracket(*left, *right))
        )),
        Certificate::Fitting {
            torus,
            nil_part,
            generator,
        } => {
            out.push_str(&format!("\n  torus part T = {}", lie_basis_text(l, torus)));
            out.push_str(&format!("\n  nil part N = {}", lie_basis_text(l, nil_part)));
            match generator {
                Some(g) => out.push_str(&format!(
                    "\n  N is nilcyclic, generated by {}",
                    lie_text(l, g)
                )),
                None => out.push_str("\n  N is not nilcyclic"),
            }
        }
        Certificate::Brute { right, left } => {
            out.push('\n');
            out.push_str(&side_text(a, right));
            out.push('\n');
            out.push_str(&side_text(a, left));
        }
    }
    out
}
