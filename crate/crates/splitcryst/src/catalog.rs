//! The seven lattices, the 73 split crystallographic groups, integral
//! representations and a bounded arithmetic-equivalence search.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::Error;
use crate::exact::{Lattice, Vec3};
use crate::fingroup::FinGroupType;
use crate::kgroup::{smith_normal_form, IntMatrix};
use crate::point_group::{standard_point_group, PointGroup};

/// Basis of lattice `i` (1-based).
pub fn lattice_basis(i: usize) -> Option<[Vec3; 3]> {
    let v = |s: &str| Vec3::parse(s);
    Some(match i {
        1 => [v("1 0 0"), v("0 1 0"), v("0 0 1")],
        2 => [v("1/2 1/2 1/2"), v("0 1 0"), v("0 0 1")],
        3 => [v("1/2 1/2 0"), v("1/2 0 1/2"), v("0 1/2 1/2")],
        4 => [v("1/2 0 1/2"), v("0 1 0"), v("0 0 1")],
        5 => [v("1 1 1"), v("1 -1 0"), v("0 -1 1")],
        6 => [v("2/3 -1/3 2/3"), v("1 -1 0"), v("0 -1 1")],
        7 => [v("1 1 1"), v("1/3 -2/3 1/3"), v("0 -1 1")],
        _ => return None,
    })
}

pub fn lattice(i: usize) -> Result<Lattice, Error> {
    let b = lattice_basis(i).ok_or_else(|| Error::UnknownName(format!("lattice {i}")))?;
    Lattice::new(b, Some(format!("L{i}")))
}

/// Point groups paired with each lattice, maximal group first.
pub const TABLE: [&[&str]; 7] = [
    &[
        "S4+x(-1)", "S4+", "S'_4", "A4+x(-1)", "A4+", "D''_4", "D4+x(-1)", "D4+", "C'_2", "D2+x(-1)", "D2+", "C'_4",
        "C4+x(-1)", "C4+", "D'_2", "C2+x(-1)", "C2+", "D'_4", "C1+x(-1)", "C1+", "Dhat'_4",
    ],
    &[
        "S4+x(-1)", "S4+", "S'_4", "A4+x(-1)", "A4+", "D''_4", "D4+x(-1)", "D4+", "C'_2", "D2+x(-1)", "D2+", "C'_4",
        "C4+x(-1)", "C4+", "D'_2", "C2+x(-1)", "C2+", "D'_4", "Dhat'_4",
    ],
    &["S4+x(-1)", "S4+", "S'_4", "A4+x(-1)", "A4+", "D'_2", "D2+x(-1)", "D2+"],
    &["D2+x(-1)", "D2+", "D'_2", "D'_2_2"],
    &[
        "D6+x(-1)", "D6+", "C'_6", "C6+x(-1)", "D'_6", "C6+", "D3+x(-1)", "Dhat'_6", "C3+", "C3+x(-1)", "D'_3", "D3+",
        "D''_6",
    ],
    &["D3+x(-1)", "D3+", "D'_3", "C3+x(-1)", "C3+"],
    &["D3+x(-1)", "D3+", "D'_3"],
];

/// A split crystallographic group `L ⋊ H`.
#[derive(Clone, Debug)]
pub struct CrystGroup {
    pub label: String,
    pub lattice_index: usize,
    pub lattice: Lattice,
    pub point_group: PointGroup,
}

impl CrystGroup {
    pub fn name(&self) -> &str {
        self.point_group.name.as_deref().unwrap_or("")
    }

    pub fn is_maximal(&self) -> bool {
        TABLE[self.lattice_index - 1][0] == self.name()
    }
}

pub fn label_for(name: &str, lattice_index: usize) -> String {
    format!("{name}_{lattice_index}")
}

pub fn catalog() -> Result<Vec<CrystGroup>, Error> {
    let mut out = Vec::new();
    for (k, names) in TABLE.iter().enumerate() {
        let l = lattice(k + 1)?;
        for name in names.iter() {
            let h = standard_point_group(name)?;
            if !h.preserves_lattice(&l) {
                return Err(Error::CatalogInconsistent(format!("{name} does not preserve L{}", k + 1)));
            }
            out.push(CrystGroup {
                label: label_for(name, k + 1),
                lattice_index: k + 1,
                lattice: l.clone(),
                point_group: h,
            });
        }
    }
    Ok(out)
}

/// Accepts a catalog label or `Gamma_i` for the maximal group on lattice `i`.
pub fn resolve_label(label: &str) -> Option<String> {
    if let Some(i) = label.strip_prefix("Gamma_").and_then(|s| s.parse::<usize>().ok()) {
        return (1..=7).contains(&i).then(|| label_for(TABLE[i - 1][0], i));
    }
    let (name, idx) = label.rsplit_once('_')?;
    let i: usize = idx.parse().ok()?;
    (1..=7).contains(&i).then_some(())?;
    TABLE[i - 1].contains(&name).then(|| label.to_string())
}

pub fn find<'a>(cat: &'a [CrystGroup], label: &str) -> Result<&'a CrystGroup, Error> {
    let l = resolve_label(label).ok_or_else(|| Error::NotInCatalog(label.to_string()))?;
    cat.iter().find(|g| g.label == l).ok_or_else(|| Error::NotInCatalog(label.to_string()))
}

/// The maximal group on lattice `i`.
pub fn gamma(cat: &[CrystGroup], i: usize) -> &CrystGroup {
    cat.iter().find(|g| g.lattice_index == i && g.is_maximal()).expect("maximal group")
}

/// The point group rewritten in lattice coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralRep {
    pub matrices: Vec<[[i64; 3]; 3]>,
}

pub fn integral_representation(g: &CrystGroup) -> Result<IntegralRep, Error> {
    let mut mats = Vec::new();
    for h in g.point_group.elements() {
        let m = g.lattice.in_basis(h);
        mats.push(m.to_i64().ok_or_else(|| Error::NonIntegralResult(format!("{} in {}", h, g.label)))?);
    }
    mats.sort();
    Ok(IntegralRep { matrices: mats })
}

type M3 = [[i64; 3]; 3];

fn mul3(a: &M3, b: &M3) -> M3 {
    let mut c = [[0i64; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

fn det3(a: &M3) -> i64 {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

fn adj3(a: &M3) -> M3 {
    let c = |i: usize, j: usize| {
        let r: Vec<usize> = (0..3).filter(|&x| x != i).collect();
        let s: Vec<usize> = (0..3).filter(|&x| x != j).collect();
        let m = a[r[0]][s[0]] * a[r[1]][s[1]] - a[r[0]][s[1]] * a[r[1]][s[0]];
        if (i + j).is_multiple_of(2) {
            m
        } else {
            -m
        }
    };
    core::array::from_fn(|j| core::array::from_fn(|i| c(i, j)))
}

/// Searches integer matrices with entries in `[-bound, bound]` and determinant
/// `±1` for `M` with `M rep1 M^-1 = rep2`.
pub fn bounded_conjugacy(rep1: &IntegralRep, rep2: &IntegralRep, bound: i64) -> Option<[[i64; 3]; 3]> {
    if rep1.matrices.len() != rep2.matrices.len() {
        return None;
    }
    let target: BTreeSet<M3> = rep2.matrices.iter().copied().collect();
    let gens = small_generating_set(&rep1.matrices);
    let span = (2 * bound + 1) as usize;
    let total = span.pow(9);
    for code in 0..total {
        let mut m = [[0i64; 3]; 3];
        let mut c = code;
        for e in m.iter_mut().flatten() {
            *e = (c % span) as i64 - bound;
            c /= span;
        }
        let d = det3(&m);
        if d != 1 && d != -1 {
            continue;
        }
        let inv = adj3(&m).map(|r| r.map(|x| x * d));
        if gens.iter().all(|g| target.contains(&mul3(&mul3(&m, g), &inv))) {
            return Some(m);
        }
    }
    None
}

fn small_generating_set(mats: &[M3]) -> Vec<M3> {
    let id = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let mut gens: Vec<M3> = Vec::new();
    let mut span: BTreeSet<M3> = BTreeSet::from([id]);
    for m in mats {
        if span.contains(m) {
            continue;
        }
        gens.push(*m);
        let mut queue: Vec<M3> = span.iter().copied().collect();
        let mut i = 0;
        while i < queue.len() {
            for g in &gens {
                let p = mul3(&queue[i], g);
                if span.insert(p) {
                    queue.push(p);
                }
            }
            i += 1;
        }
    }
    gens
}

/// Arithmetic invariants of a pair, invariant under integral conjugation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ArithInvariant {
    pub iso: FinGroupType,
    pub minus_one: bool,
    /// Invariant factors of the coinvariants `L / sum (h - 1) L`, with free rank.
    pub coinvariants: (usize, Vec<BigInt>),
    /// Multiset over elements `h` of the invariant factors of `h - 1`.
    pub element_classes: Vec<(usize, Vec<BigInt>)>,
}

fn snf_shape(rows: Vec<Vec<BigInt>>, ncols: usize) -> (usize, Vec<BigInt>) {
    if rows.is_empty() {
        return (ncols, Vec::new());
    }
    let s = smith_normal_form(&IntMatrix::from_rows(rows));
    let free = ncols - s.rank();
    (free, s.factors.into_iter().filter(|f| !f.abs().eq(&BigInt::from(1))).collect())
}

pub fn arithmetic_invariant(g: &CrystGroup) -> Result<ArithInvariant, Error> {
    let rep = integral_representation(g)?;
    let minus = |m: &M3| -> Vec<Vec<BigInt>> {
        (0..3).map(|i| (0..3).map(|j| BigInt::from(m[i][j] - i64::from(i == j))).collect()).collect()
    };
    let mut all_rows = Vec::new();
    let mut classes = Vec::new();
    for m in &rep.matrices {
        let rows = minus(m);
        classes.push(snf_shape(rows.clone(), 3));
        all_rows.extend(rows);
    }
    classes.sort();
    Ok(ArithInvariant {
        iso: g.point_group.iso_type()?,
        minus_one: g.point_group.has_minus_one(),
        coinvariants: snf_shape(all_rows, 3),
        element_classes: classes,
    })
}

#[derive(Clone, Debug, Default)]
pub struct CatalogReport {
    pub valid: usize,
    /// Pairs with equal invariants, each separated by the bounded search.
    pub collisions: Vec<(String, String)>,
    pub per_lattice: [usize; 7],
}

/// Validates every pair and checks that no two pairs are arithmetically equivalent.
pub fn verify_catalog(cat: &[CrystGroup], bound: i64) -> Result<CatalogReport, Error> {
    let mut report = CatalogReport::default();
    let mut invs = Vec::new();
    for g in cat {
        if !g.point_group.preserves_lattice(&g.lattice) {
            return Err(Error::CatalogInconsistent(g.label.clone()));
        }
        report.valid += 1;
        report.per_lattice[g.lattice_index - 1] += 1;
        invs.push((arithmetic_invariant(g)?, integral_representation(g)?));
    }
    let labels: BTreeSet<&str> = cat.iter().map(|g| g.label.as_str()).collect();
    if labels.len() != cat.len() {
        return Err(Error::CatalogInconsistent("duplicate label".into()));
    }
    for i in 0..cat.len() {
        for j in i + 1..cat.len() {
            if invs[i].0 != invs[j].0 {
                continue;
            }
            if bounded_conjugacy(&invs[i].1, &invs[j].1, bound).is_some() {
                return Err(Error::CatalogInconsistent(format!("{} ~ {}", cat[i].label, cat[j].label)));
            }
            report.collisions.push((cat[i].label.clone(), cat[j].label.clone()));
        }
    }
    Ok(report)
}

/// Every non-maximal group sits inside the maximal group of its lattice.
pub fn maximal_containment(cat: &[CrystGroup]) -> bool {
    cat.iter().all(|g| g.point_group.is_subgroup_of(&gamma(cat, g.lattice_index).point_group))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let cat = catalog().unwrap();
        assert_eq!(cat.len(), 73);
        let per: Vec<usize> = (1..=7).map(|i| cat.iter().filter(|g| g.lattice_index == i).count()).collect();
        assert_eq!(per, vec![21, 19, 8, 4, 13, 5, 3]);
        assert!(maximal_containment(&cat));
    }

    #[test]
    fn labels() {
        let cat = catalog().unwrap();
        let g = find(&cat, "S4+x(-1)_1").unwrap();
        assert_eq!(g.lattice, lattice(1).unwrap());
        let d3 = find(&cat, "D'_3_7").unwrap();
        assert_eq!(d3.lattice.basis[1], Vec3::parse("1/3 -2/3 1/3"));
        assert_eq!(find(&cat, "Gamma_5").unwrap().label, "D6+x(-1)_5");
        assert!(find(&cat, "D6+_1").is_err());
        assert!(find(&cat, "Gamma_8").is_err());
    }

    #[test]
    fn integral_reps() {
        let cat = catalog().unwrap();
        let r = integral_representation(find(&cat, "C1+x(-1)_1").unwrap()).unwrap();
        assert_eq!(r.matrices, vec![[[-1, 0, 0], [0, -1, 0], [0, 0, -1]], [[1, 0, 0], [0, 1, 0], [0, 0, 1]]]);
        let s4 = integral_representation(find(&cat, "S4+_1").unwrap()).unwrap();
        assert_eq!(s4.matrices.len(), 24);
        let d3 = integral_representation(find(&cat, "D3+_5").unwrap()).unwrap();
        assert_eq!(d3.matrices.len(), 6);
    }

    #[test]
    fn conjugacy_search() {
        let cat = catalog().unwrap();
        let a = integral_representation(find(&cat, "D2+x(-1)_1").unwrap()).unwrap();
        assert!(bounded_conjugacy(&a, &a, 1).is_some());
        let b = integral_representation(find(&cat, "D2+x(-1)_3").unwrap()).unwrap();
        assert!(bounded_conjugacy(&a, &b, 2).is_none());
        // The same pair in a second basis is found.
        let p: M3 = [[1, 1, 0], [0, 1, 0], [0, 0, 1]];
        let pi = adj3(&p);
        let moved = IntegralRep { matrices: a.matrices.iter().map(|m| mul3(&mul3(&p, m), &pi)).collect() };
        let w = bounded_conjugacy(&a, &moved, 1).unwrap();
        assert_eq!(det3(&w).abs(), 1);
    }
}
