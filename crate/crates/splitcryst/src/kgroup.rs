//! K-group expressions, the lookup table for finite stabilizers, Smith normal
//! form, and the E2 terms of the Quinn spectral sequence.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::fingroup::FinGroupType;

/// Direct sum of copies of Z, Z/2, Z/4, the countable sums of Z/2 and Z/4,
/// and the Nil groups NK1(ZD4), NK1(ZD6).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct KExpr {
    pub free_rank: u32,
    pub z2_count: u32,
    pub z4_count: u32,
    pub inf_z2: bool,
    pub inf_z4: bool,
    pub nk_d4: u32,
    pub nk_d6: u32,
}

impl KExpr {
    pub const ZERO: KExpr =
        KExpr { free_rank: 0, z2_count: 0, z4_count: 0, inf_z2: false, inf_z4: false, nk_d4: 0, nk_d6: 0 };

    pub fn free(n: u32) -> Self {
        KExpr { free_rank: n, ..Self::ZERO }
    }

    pub fn z2(n: u32) -> Self {
        KExpr { z2_count: n, ..Self::ZERO }
    }

    pub fn z4(n: u32) -> Self {
        KExpr { z4_count: n, ..Self::ZERO }
    }

    pub fn inf_z2() -> Self {
        KExpr { inf_z2: true, ..Self::ZERO }
    }

    pub fn inf_z4() -> Self {
        KExpr { inf_z4: true, ..Self::ZERO }
    }

    pub fn nk_d4(n: u32) -> Self {
        KExpr { nk_d4: n, ..Self::ZERO }
    }

    pub fn nk_d6(n: u32) -> Self {
        KExpr { nk_d6: n, ..Self::ZERO }
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::ZERO
    }

    /// Finite abelian group from a free rank and torsion invariant factors.
    pub fn from_abelian(rank: usize, torsion: &[BigInt]) -> Result<Self, Error> {
        let mut k = Self::free(rank as u32);
        for d in torsion {
            match d.to_u32() {
                Some(1) => {}
                Some(2) => k.z2_count += 1,
                Some(4) => k.z4_count += 1,
                _ => return Err(Error::UnsupportedTorsion(d.to_string())),
            }
        }
        Ok(k)
    }

    /// Parses the rendered form, e.g. `"(Z/4)^4 + inf(Z/2) + 2*NK1(ZD4)"`.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let bad = || Error::Procedure(format!("cannot parse K-group {s:?}"));
        let s = s.trim();
        if s == "0" {
            return Ok(Self::ZERO);
        }
        let mut k = Self::ZERO;
        for term in s.split(" + ") {
            let term = term.trim();
            let (coef, body) = match term.split_once('*') {
                Some((c, b)) => (c.parse::<u32>().map_err(|_| bad())?, b),
                None => (1, term),
            };
            let (base, pow) = match body.rsplit_once('^') {
                Some((b, p)) => (b, p.parse::<u32>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let n = coef * pow;
            match base {
                "Z" => k.free_rank += n,
                "Z/2" | "(Z/2)" => k.z2_count += n,
                "Z/4" | "(Z/4)" => k.z4_count += n,
                "inf(Z/2)" => k.inf_z2 = true,
                "inf(Z/4)" => k.inf_z4 = true,
                "NK1(ZD4)" => k.nk_d4 += n,
                "NK1(ZD6)" => k.nk_d6 += n,
                _ => return Err(bad()),
            }
        }
        Ok(k)
    }
}

impl Add for KExpr {
    type Output = KExpr;
    fn add(self, o: KExpr) -> KExpr {
        KExpr {
            free_rank: self.free_rank + o.free_rank,
            z2_count: self.z2_count + o.z2_count,
            z4_count: self.z4_count + o.z4_count,
            inf_z2: self.inf_z2 || o.inf_z2,
            inf_z4: self.inf_z4 || o.inf_z4,
            nk_d4: self.nk_d4 + o.nk_d4,
            nk_d6: self.nk_d6 + o.nk_d6,
        }
    }
}

impl core::iter::Sum for KExpr {
    fn sum<I: Iterator<Item = KExpr>>(iter: I) -> KExpr {
        iter.fold(KExpr::ZERO, Add::add)
    }
}

impl fmt::Display for KExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let power = |base: &str, paren: bool, n: u32| -> Option<String> {
            match n {
                0 => None,
                1 => Some(base.to_string()),
                _ if paren => Some(format!("({base})^{n}")),
                _ => Some(format!("{base}^{n}")),
            }
        };
        let mult = |base: &str, n: u32| -> Option<String> {
            match n {
                0 => None,
                1 => Some(base.to_string()),
                _ => Some(format!("{n}*{base}")),
            }
        };
        let parts: Vec<String> = [
            power("Z", false, self.free_rank),
            power("Z/2", true, self.z2_count),
            power("Z/4", true, self.z4_count),
            self.inf_z2.then(|| "inf(Z/2)".to_string()),
            self.inf_z4.then(|| "inf(Z/4)".to_string()),
            mult("NK1(ZD4)", self.nk_d4),
            mult("NK1(ZD6)", self.nk_d6),
        ]
        .into_iter()
        .flatten()
        .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `Wh_q` of the integral group ring of a finite stabilizer, for `q <= 1`.
pub fn wh_table(t: FinGroupType, q: i32) -> KExpr {
    use FinGroupType::*;
    match (t, q) {
        (Z6 | D6, -1) => KExpr::free(1),
        (Z4xZ2 | D2xZ2, 0) => KExpr::z2(1),
        (D4xZ2, 0) => KExpr::z4(1),
        (Z6xZ2 | D6xZ2, -1) => KExpr::free(3),
        (Z6xZ2 | D6xZ2, 0) => KExpr::z2(2),
        (A4xZ2, -1) => KExpr::free(1),
        (A4xZ2, 0) => KExpr::z2(1),
        (S4xZ2, -1) => KExpr::free(1),
        (S4xZ2, 0) => KExpr::z4(1),
        _ => KExpr::ZERO,
    }
}

/// Rank of `K_-1` as a free abelian group.
pub fn k_minus1_rank(t: FinGroupType) -> usize {
    wh_table(t, -1).free_rank as usize
}

/// An editable copy of [`wh_table`] for the levels `q = -1, 0, 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteKTable {
    entries: BTreeMap<(FinGroupType, i32), KExpr>,
}

impl Default for FiniteKTable {
    fn default() -> Self {
        let mut entries = BTreeMap::new();
        for t in FinGroupType::ALL {
            for q in -1..=1 {
                let k = wh_table(t, q);
                if !k.is_zero() {
                    entries.insert((t, q), k);
                }
            }
        }
        FiniteKTable { entries }
    }
}

impl FiniteKTable {
    pub fn get(&self, t: FinGroupType, q: i32) -> KExpr {
        self.entries.get(&(t, q)).copied().unwrap_or(KExpr::ZERO)
    }

    pub fn set(&mut self, t: FinGroupType, q: i32, k: KExpr) {
        if k.is_zero() {
            self.entries.remove(&(t, q));
        } else {
            self.entries.insert((t, q), k);
        }
    }

    /// Nonzero entries in type order.
    pub fn nonzero(&self) -> impl Iterator<Item = (FinGroupType, i32, KExpr)> + '_ {
        self.entries.iter().map(|(&(t, q), &k)| (t, q, k))
    }

    fn rank(&self, t: FinGroupType) -> usize {
        self.get(t, -1).free_rank as usize
    }
}

/// Image of the generator of `K_-1(Z[edge]) = Z` in `K_-1(Z[vertex])` for an
/// inclusion of stabilizers. Only the order-6 cyclic and dihedral edges carry
/// nonzero `K_-1`; the target's first coordinate is the retract summand.
pub fn inclusion_k_minus1(edge: FinGroupType, vertex: FinGroupType) -> Result<Vec<i64>, Error> {
    inclusion_in(&FiniteKTable::default(), edge, vertex)
}

fn inclusion_in(table: &FiniteKTable, edge: FinGroupType, vertex: FinGroupType) -> Result<Vec<i64>, Error> {
    use FinGroupType::*;
    let (re, rv) = (table.rank(edge), table.rank(vertex));
    if re == 0 {
        return Ok(vec![0; rv]);
    }
    let known = matches!((edge, vertex), (Z6, Z6) | (D6, D6) | (Z6, D6) | (Z6, Z6xZ2) | (D6, D6xZ2) | (Z6, D6xZ2));
    if !known || re != 1 || rv == 0 {
        return Err(Error::UnknownInclusion(format!("{edge} -> {vertex}")));
    }
    let mut v = vec![0; rv];
    v[0] = 1;
    Ok(v)
}

/// Dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        IntMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, o.rows);
        let mut m = IntMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = m.get(i, j) + a * o.get(k, j);
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols);
        // Bareiss fraction-free elimination.
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(dst, j) + k * self.get(src, j);
            self.set(dst, j, v);
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, dst) + k * self.get(i, src);
            self.set(i, dst, v);
        }
    }
}

/// Smith normal form `M = U D V` with `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Nonzero diagonal entries, each dividing the next.
    pub factors: Vec<BigInt>,
}

impl Snf {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut d = m.clone();
    // Invariant: m = u * d * v.
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let (r, c) = (m.rows, m.cols);
    let mut t = 0;
    while t < r.min(c) {
        // Pivot: smallest nonzero entry in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let x = d.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        if pi != t {
            d.swap_rows(t, pi);
            u.swap_cols(t, pi);
        }
        if pj != t {
            d.swap_cols(t, pj);
            v.swap_rows(t, pj);
        }
        let mut clean = true;
        for i in t + 1..r {
            let q = d.get(i, t).div_floor(d.get(t, t));
            if !q.is_zero() {
                d.add_row(i, t, &-&q);
                u.add_col(t, i, &q);
            }
            clean &= d.get(i, t).is_zero();
        }
        for j in t + 1..c {
            let q = d.get(t, j).div_floor(d.get(t, t));
            if !q.is_zero() {
                d.add_col(j, t, &-&q);
                v.add_row(t, j, &q);
            }
            clean &= d.get(t, j).is_zero();
        }
        if !clean {
            continue;
        }
        // Enforce divisibility of the rest of the block by the pivot.
        let p = d.get(t, t).clone();
        let offender = (t + 1..r).find_map(|i| (t + 1..c).find(|&j| !(d.get(i, j) % &p).is_zero()).map(|j| (i, j)));
        if let Some((i, _)) = offender {
            d.add_row(t, i, &BigInt::one());
            u.add_col(i, t, &-BigInt::one());
            continue;
        }
        if p.is_negative() {
            for j in 0..c {
                let x = -d.get(t, j);
                d.set(t, j, x);
            }
            for i in 0..r {
                let x = -u.get(i, t);
                u.set(i, t, x);
            }
        }
        t += 1;
    }
    let factors = (0..r.min(c)).map(|i| d.get(i, i).clone()).filter(|x| !x.is_zero()).collect();
    Snf { u, d, v, factors }
}

/// The chain complex `C1 -> C0` with coefficients in one K-group level.
#[derive(Clone, Debug)]
pub struct QuinnComplex {
    pub vertex_types: Vec<FinGroupType>,
    pub edge_types: Vec<FinGroupType>,
    /// `(tail, head)` vertex indices for each edge; `None` for a negligible endpoint.
    pub edge_ends: Vec<(Option<usize>, Option<usize>)>,
}

/// `E2_{0,q}` and `E2_{1,q}` for `q = -1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct E2Terms {
    pub e0: KExpr,
    pub e1: KExpr,
}

impl QuinnComplex {
    /// Boundary map on `K_-1`, rows indexed by vertex summands, columns by edge summands.
    pub fn boundary_k_minus1(&self) -> Result<IntMatrix, Error> {
        self.boundary_in(&FiniteKTable::default())
    }

    fn boundary_in(&self, table: &FiniteKTable) -> Result<IntMatrix, Error> {
        if self.edge_ends.len() != self.edge_types.len() {
            return Err(Error::DimensionMismatch);
        }
        let voff: Vec<usize> = offsets(self.vertex_types.iter().map(|t| table.rank(*t)));
        let eoff: Vec<usize> = offsets(self.edge_types.iter().map(|t| table.rank(*t)));
        let rows = *voff.last().unwrap();
        let cols = *eoff.last().unwrap();
        let mut m = IntMatrix::zeros(rows, cols);
        for (e, (&et, &(tail, head))) in self.edge_types.iter().zip(&self.edge_ends).enumerate() {
            if table.rank(et) == 0 {
                continue;
            }
            for (end, sign) in [(tail, -1i64), (head, 1i64)] {
                let Some(vi) = end else { continue };
                let vt = *self.vertex_types.get(vi).ok_or(Error::DimensionMismatch)?;
                let img = inclusion_in(table, et, vt)?;
                for (k, x) in img.iter().enumerate() {
                    let cur = m.get(voff[vi] + k, eoff[e]) + BigInt::from(sign * x);
                    m.set(voff[vi] + k, eoff[e], cur);
                }
            }
        }
        Ok(m)
    }

    pub fn k_minus1_terms(&self) -> Result<E2Terms, Error> {
        self.k_minus1_terms_in(&FiniteKTable::default())
    }

    pub fn k_minus1_terms_in(&self, table: &FiniteKTable) -> Result<E2Terms, Error> {
        chain_homology(&self.boundary_in(table)?)
    }

    /// `E2_{0,0}`: edges carry no reduced `K_0`, so this is the plain sum.
    pub fn k0_vertex_sum(&self) -> Result<KExpr, Error> {
        self.k0_vertex_sum_in(&FiniteKTable::default())
    }

    pub fn k0_vertex_sum_in(&self, table: &FiniteKTable) -> Result<KExpr, Error> {
        if let Some(t) = self.edge_types.iter().find(|t| !table.get(**t, 0).is_zero()) {
            return Err(Error::Procedure(format!("edge stabilizer {t} has nonzero reduced K_0")));
        }
        Ok(self.vertex_types.iter().map(|t| table.get(*t, 0)).sum())
    }
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v = vec![0];
    for s in sizes {
        v.push(v.last().unwrap() + s);
    }
    v
}

/// Cokernel and kernel of a map of free abelian groups.
pub fn chain_homology(m: &IntMatrix) -> Result<E2Terms, Error> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let e0 = KExpr::from_abelian(m.rows - rank, &snf.factors)?;
    let e1 = KExpr::free((m.cols - rank) as u32);
    Ok(E2Terms { e0, e1 })
}

/// The `E_fin` homology `(H_-1, H_0, H_1)`.
pub fn assemble_hfin(c: &QuinnComplex, label: &str) -> Result<(KExpr, KExpr, KExpr), Error> {
    assemble_hfin_in(&FiniteKTable::default(), c, label)
}

/// As [`assemble_hfin`], reading stabilizer K-groups from `table`.
pub fn assemble_hfin_in(table: &FiniteKTable, c: &QuinnComplex, label: &str) -> Result<(KExpr, KExpr, KExpr), Error> {
    let e = c.k_minus1_terms_in(table)?;
    let k0 = c.k0_vertex_sum_in(table)?;
    if !k0.is_zero() && !e.e1.is_zero() {
        return Err(Error::HomologyOverlap(label.to_string()));
    }
    let wh: KExpr = c.vertex_types.iter().map(|t| table.get(*t, 1)).sum();
    Ok((e.e0, k0 + e.e1, wh))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMatrix) {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(&s.d).mul(&s.v), *m);
        assert!(s.u.det().abs().is_one());
        assert!(s.v.det().abs().is_one());
        for w in s.factors.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        for i in 0..s.d.rows {
            for j in 0..s.d.cols {
                if i != j {
                    assert!(s.d.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn snf_examples() {
        let id = IntMatrix::identity(2);
        assert_eq!(smith_normal_form(&id).factors, vec![BigInt::from(1), BigInt::from(1)]);
        let d = IntMatrix::from_i64(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(smith_normal_form(&d).factors, vec![BigInt::from(1), BigInt::from(6)]);
        check_snf(&d);
        let r = IntMatrix::from_i64(&[vec![1, -1]]);
        assert_eq!(smith_normal_form(&r).factors, vec![BigInt::from(1)]);
        check_snf(&IntMatrix::from_i64(&[vec![4, 6, 0], vec![6, 9, 12], vec![2, 0, 8]]));
        check_snf(&IntMatrix::zeros(3, 2));
    }

    #[test]
    fn homology_examples() {
        // rho: Z -> Z^2, 1 -> (1, -1)
        let m = IntMatrix::from_i64(&[vec![1], vec![-1]]);
        let h = chain_homology(&m).unwrap();
        assert_eq!(h, E2Terms { e0: KExpr::free(1), e1: KExpr::ZERO });
        let z = IntMatrix::zeros(0, 0);
        assert_eq!(chain_homology(&z).unwrap(), E2Terms { e0: KExpr::ZERO, e1: KExpr::ZERO });
        let m = IntMatrix::from_i64(&[vec![-1, 1], vec![1, -1]]);
        let h = chain_homology(&m).unwrap();
        assert_eq!(h, E2Terms { e0: KExpr::free(1), e1: KExpr::free(1) });
        let m = IntMatrix::from_i64(&[vec![3]]);
        assert!(matches!(chain_homology(&m), Err(Error::UnsupportedTorsion(_))));
    }

    #[test]
    fn table_lookup() {
        assert_eq!(wh_table(FinGroupType::Z6, -1), KExpr::free(1));
        assert_eq!(wh_table(FinGroupType::Z2, 0), KExpr::ZERO);
        assert_eq!(wh_table(FinGroupType::D6xZ2, 0), KExpr::z2(2));
        assert_eq!(wh_table(FinGroupType::S4xZ2, 1), KExpr::ZERO);
        assert_eq!(wh_table(FinGroupType::S4xZ2, -2), KExpr::ZERO);
    }

    #[test]
    fn render_and_parse() {
        let k = KExpr::z4(4) + KExpr::inf_z2() + KExpr::inf_z4();
        assert_eq!(k.to_string(), "(Z/4)^4 + inf(Z/2) + inf(Z/4)");
        let w = KExpr::inf_z2() + KExpr::nk_d4(2);
        assert_eq!(w.to_string(), "inf(Z/2) + 2*NK1(ZD4)");
        assert_eq!(KExpr::free(2).to_string(), "Z^2");
        assert_eq!(KExpr::ZERO.to_string(), "0");
        assert_eq!(KExpr::z2(1).to_string(), "Z/2");
        for s in ["Z^7", "(Z/2)^2 + (Z/4)^4 + inf(Z/2) + inf(Z/4)", "Z + inf(Z/2)", "inf(Z/2) + NK1(ZD6)", "0"] {
            assert_eq!(KExpr::parse(s).unwrap().to_string(), s);
        }
        assert!(KExpr::parse("Z/3").is_err());
    }

    #[test]
    fn finite_counts_stay_beside_infinite_sums() {
        let k = KExpr::z2(2) + KExpr::inf_z2();
        assert_eq!(k.z2_count, 2);
        assert!(k.inf_z2);
        assert_eq!(k + KExpr::inf_z2(), k);
    }

    #[test]
    fn two_vertex_complex() {
        use FinGroupType::*;
        let c = QuinnComplex {
            vertex_types: vec![D6, D6],
            edge_types: vec![Z6, Z6],
            edge_ends: vec![(Some(0), Some(1)), (Some(0), Some(1))],
        };
        assert_eq!(assemble_hfin(&c, "x").unwrap(), (KExpr::free(1), KExpr::free(1), KExpr::ZERO));
        let bad = QuinnComplex { vertex_types: vec![Z4], edge_types: vec![Z6], edge_ends: vec![(Some(0), None)] };
        assert!(matches!(bad.k_minus1_terms(), Err(Error::UnknownInclusion(_))));
    }
}
