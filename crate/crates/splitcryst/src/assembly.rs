//! Final lower K-theory: the finite-stabilizer homology plus the cokernels
//! contributed by the non-negligible lines.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::catalog::{find, CrystGroup};
use crate::cells::{cell_complex, quinn_complex};
use crate::error::Error;
use crate::kgroup::{assemble_hfin_in, FiniteKTable, KExpr};
use crate::lines::{cokernel, line_data, LineData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KTheoryResult {
    pub label: String,
    pub k_minus1: KExpr,
    pub k0_tilde: KExpr,
    pub wh: KExpr,
}

impl KTheoryResult {
    pub fn is_zero(&self) -> bool {
        self.k_minus1.is_zero() && self.k0_tilde.is_zero() && self.wh.is_zero()
    }
}

impl fmt::Display for KTheoryResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K_-1 = {}; K0~ = {}; Wh = {}", self.k_minus1, self.k0_tilde, self.wh)
    }
}

/// `(H_-1, H_0, H_1)` of the classifying space for finite subgroups.
pub fn hfin(cat: &[CrystGroup], label: &str) -> Result<(KExpr, KExpr, KExpr), Error> {
    hfin_in(&FiniteKTable::default(), cat, label)
}

pub fn hfin_in(table: &FiniteKTable, cat: &[CrystGroup], label: &str) -> Result<(KExpr, KExpr, KExpr), Error> {
    let g = find(cat, label)?;
    let cx = cell_complex(cat, label)?;
    assemble_hfin_in(table, &quinn_complex(g, &cx)?, &g.label)
}

/// Adds the line cokernels to a precomputed `H_fin`.
pub fn combine(label: &str, h: (KExpr, KExpr, KExpr), lines: &[LineData]) -> KTheoryResult {
    let sum = |n: i32| lines.iter().map(|d| cokernel(d.vc, n)).sum::<KExpr>();
    KTheoryResult { label: label.into(), k_minus1: h.0 + sum(-1), k0_tilde: h.1 + sum(0), wh: h.2 + sum(1) }
}

pub fn k_theory(cat: &[CrystGroup], label: &str) -> Result<KTheoryResult, Error> {
    k_theory_in(&FiniteKTable::default(), cat, label)
}

pub fn k_theory_in(table: &FiniteKTable, cat: &[CrystGroup], label: &str) -> Result<KTheoryResult, Error> {
    let g = find(cat, label)?;
    let h = hfin_in(table, cat, label)?;
    Ok(combine(&g.label, h, &line_data(cat, label)?))
}

/// Results for the whole catalog, in catalog order.
pub fn k_theory_all(cat: &[CrystGroup]) -> Result<Vec<KTheoryResult>, Error> {
    cat.iter().map(|g| k_theory(cat, &g.label)).collect()
}

/// Lists groups whose K-theory vanishes in every degree.
pub fn vanishing(results: &[KTheoryResult]) -> Vec<String> {
    results.iter().filter(|r| r.is_zero()).map(|r| r.label.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use alloc::string::ToString;

    #[test]
    fn examples() {
        let cat = catalog().unwrap();
        let g1 = k_theory(&cat, "Gamma_1").unwrap();
        assert_eq!(g1.to_string(), "K_-1 = Z^2; K0~ = (Z/4)^4 + inf(Z/2) + inf(Z/4); Wh = inf(Z/2) + 2*NK1(ZD4)");
        let a4 = k_theory(&cat, "A4+x(-1)_1").unwrap();
        assert_eq!(a4.k_minus1, KExpr::free(2));
        assert_eq!(a4.k0_tilde, KExpr::z2(4) + KExpr::inf_z2());
        assert_eq!(a4.wh, KExpr::inf_z2());
        let g6 = k_theory(&cat, "Gamma_6").unwrap();
        assert_eq!((g6.k_minus1, g6.k0_tilde, g6.wh), (KExpr::free(2), KExpr::ZERO, KExpr::ZERO));
        let g5 = k_theory(&cat, "Gamma_5").unwrap();
        assert_eq!(g5.to_string(), "K_-1 = Z^7; K0~ = (Z/2)^6 + inf(Z/2); Wh = inf(Z/2) + NK1(ZD6)");
        assert!(k_theory(&cat, "C1+_1").unwrap().is_zero());
        assert!(matches!(k_theory(&cat, "D6+_1"), Err(Error::NotInCatalog(_))));
    }
}
