//! Abstract finite groups of order at most 64 as Cayley tables, with
//! isomorphism-type recognition for the stabilizer types that occur.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// A finite group given by its multiplication table. Subsets are `u64` masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinGroup {
    n: usize,
    mul: Vec<u8>,
    inv: Vec<u8>,
    id: u8,
}

impl FinGroup {
    /// `mul[a * n + b]` is the index of `a * b`.
    pub fn from_table(n: usize, mul: Vec<u8>) -> Result<Self, Error> {
        if n == 0 || n > 64 || mul.len() != n * n {
            return Err(Error::UnrecognizedType(format!("table of size {n}")));
        }
        let id = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] as usize == x && mul[x * n + e] as usize == x))
            .ok_or_else(|| Error::UnrecognizedType("no identity".into()))?;
        let mut inv = vec![0u8; n];
        for a in 0..n {
            let b = (0..n)
                .find(|&b| mul[a * n + b] as usize == id)
                .ok_or_else(|| Error::UnrecognizedType("missing inverse".into()))?;
            inv[a] = b as u8;
        }
        Ok(FinGroup { n, mul, inv, id: id as u8 })
    }

    /// Closure of permutations on a common point set.
    pub fn from_permutations(gens: &[Vec<u8>]) -> Self {
        let deg = gens.first().map_or(1, Vec::len);
        let idp: Vec<u8> = (0..deg as u8).collect();
        let compose = |a: &[u8], b: &[u8]| -> Vec<u8> { b.iter().map(|&i| a[i as usize]).collect() };
        let mut elems = vec![idp.clone()];
        let mut seen: BTreeSet<Vec<u8>> = elems.iter().cloned().collect();
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let p = compose(&elems[i], g);
                if seen.insert(p.clone()) {
                    elems.push(p);
                }
            }
            i += 1;
        }
        elems.sort();
        let n = elems.len();
        let mut mul = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                let p = compose(&elems[a], &elems[b]);
                mul[a * n + b] = elems.binary_search(&p).unwrap() as u8;
            }
        }
        Self::from_table(n, mul).unwrap()
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.id as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center_size(&self) -> usize {
        (0..self.n).filter(|&a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a))).count()
    }

    pub fn signature(&self) -> Signature {
        let mut counts = [0usize; 13];
        for a in 0..self.n {
            let o = self.element_order(a);
            if o < counts.len() {
                counts[o] += 1;
            } else {
                counts[0] += 1;
            }
        }
        Signature {
            order: self.n,
            abelian: self.is_abelian(),
            involutions: counts[2],
            order3: counts[3],
            order4: counts[4],
            order6: counts[6],
            other: counts[0] + counts[5] + counts[7..].iter().sum::<usize>(),
            center: self.center_size(),
        }
    }

    /// Smallest subgroup containing the mask.
    pub fn closure(&self, mask: u64) -> u64 {
        let mut m = mask | (1u64 << self.id);
        loop {
            let mut next = m;
            for a in bits(m) {
                for b in bits(m) {
                    next |= 1u64 << self.mul(a, b);
                }
            }
            if next == m {
                return m;
            }
            m = next;
        }
    }

    /// Every subgroup, as masks, in increasing order.
    pub fn subgroups(&self) -> Vec<u64> {
        let cyclic: BTreeSet<u64> = (0..self.n).map(|a| self.closure(1u64 << a)).collect();
        let mut all: BTreeSet<u64> = cyclic.clone();
        let mut frontier: Vec<u64> = cyclic.iter().copied().collect();
        while let Some(s) = frontier.pop() {
            for &c in &cyclic {
                if c & !s == 0 {
                    continue;
                }
                let j = self.closure(s | c);
                if all.insert(j) {
                    frontier.push(j);
                }
            }
        }
        all.into_iter().collect()
    }

    /// The subgroup given by a mask, re-indexed as its own group.
    pub fn subgroup(&self, mask: u64) -> FinGroup {
        let idx: Vec<usize> = bits(mask).collect();
        let pos = |g: usize| idx.iter().position(|&x| x == g).unwrap() as u8;
        let k = idx.len();
        let mut mul = vec![0u8; k * k];
        for (i, &a) in idx.iter().enumerate() {
            for (j, &b) in idx.iter().enumerate() {
                mul[i * k + j] = pos(self.mul(a, b));
            }
        }
        FinGroup::from_table(k, mul).unwrap()
    }

    /// Greedy generating set preferring high-order elements.
    pub fn generators(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (0..self.n).collect();
        by_order.sort_by_key(|&a| core::cmp::Reverse(self.element_order(a)));
        let mut gens = Vec::new();
        let mut cur = self.closure(0);
        for a in by_order {
            if cur == self.full_mask() {
                break;
            }
            if cur & (1u64 << a) == 0 {
                gens.push(a);
                cur = self.closure(cur | (1u64 << a));
            }
        }
        gens
    }

    pub fn iso_type(&self) -> Result<FinGroupType, Error> {
        let sig = self.signature();
        if let Some(t) = FinGroupType::ALL.iter().find(|t| t.signature() == sig) {
            return Ok(*t);
        }
        // Fingerprint did not decide; search for an explicit isomorphism.
        for t in FinGroupType::ALL.iter().filter(|t| t.order() == self.n) {
            if find_isomorphism(self, &t.model()).is_some() {
                return Ok(*t);
            }
        }
        Err(Error::UnrecognizedType(format!("{sig:?}")))
    }
}

pub(crate) fn bits(m: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| m & (1u64 << i) != 0)
}

/// Brute-force isomorphism search: returns `phi` with `phi[a]` the image of `a`.
pub fn find_isomorphism(a: &FinGroup, b: &FinGroup) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let gens = a.generators();
    // Spanning tree of words in the generators.
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; a.order()];
    let mut order = vec![a.identity()];
    let mut seen = 1u64 << a.identity();
    let mut i = 0;
    while i < order.len() {
        let x = order[i];
        for (k, &g) in gens.iter().enumerate() {
            let y = a.mul(x, g);
            if seen & (1u64 << y) == 0 {
                seen |= 1u64 << y;
                parent[y] = Some((x, k));
                order.push(y);
            }
        }
        i += 1;
    }
    let cands: Vec<Vec<usize>> =
        gens.iter().map(|&g| (0..b.order()).filter(|&h| b.element_order(h) == a.element_order(g)).collect()).collect();
    let mut choice = vec![0usize; gens.len()];
    if cands.iter().any(Vec::is_empty) {
        return None;
    }
    loop {
        let imgs: Vec<usize> = choice.iter().zip(&cands).map(|(&c, v)| v[c]).collect();
        if let Some(phi) = try_extend(a, b, &gens, &imgs, &order, &parent) {
            return Some(phi);
        }
        let mut k = 0;
        loop {
            if k == choice.len() {
                return None;
            }
            choice[k] += 1;
            if choice[k] < cands[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn try_extend(
    a: &FinGroup,
    b: &FinGroup,
    gens: &[usize],
    imgs: &[usize],
    order: &[usize],
    parent: &[Option<(usize, usize)>],
) -> Option<Vec<usize>> {
    let mut phi = vec![usize::MAX; a.order()];
    phi[a.identity()] = b.identity();
    let mut used = 1u64 << b.identity();
    for &x in &order[1..] {
        let (p, k) = parent[x].unwrap();
        let y = b.mul(phi[p], imgs[k]);
        if used & (1u64 << y) != 0 {
            return None;
        }
        used |= 1u64 << y;
        phi[x] = y;
    }
    for x in 0..a.order() {
        for (k, &g) in gens.iter().enumerate() {
            if phi[a.mul(x, g)] != b.mul(phi[x], imgs[k]) {
                return None;
            }
        }
    }
    Some(phi)
}

/// Order, commutativity, element-order counts and center size.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub order: usize,
    pub abelian: bool,
    pub involutions: usize,
    pub order3: usize,
    pub order4: usize,
    pub order6: usize,
    pub other: usize,
    pub center: usize,
}

/// Isomorphism types of finite subgroups of the split crystallographic groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FinGroupType {
    Trivial,
    Z2,
    Z3,
    Z4,
    D2,
    Z6,
    D3,
    Z4xZ2,
    D2xZ2,
    D4,
    D6,
    A4,
    Z6xZ2,
    D4xZ2,
    D6xZ2,
    S4,
    A4xZ2,
    S4xZ2,
}

impl FinGroupType {
    pub const ALL: [FinGroupType; 18] = [
        FinGroupType::Trivial,
        FinGroupType::Z2,
        FinGroupType::Z3,
        FinGroupType::Z4,
        FinGroupType::D2,
        FinGroupType::Z6,
        FinGroupType::D3,
        FinGroupType::Z4xZ2,
        FinGroupType::D2xZ2,
        FinGroupType::D4,
        FinGroupType::D6,
        FinGroupType::A4,
        FinGroupType::Z6xZ2,
        FinGroupType::D4xZ2,
        FinGroupType::D6xZ2,
        FinGroupType::S4,
        FinGroupType::A4xZ2,
        FinGroupType::S4xZ2,
    ];

    pub fn name(self) -> &'static str {
        use FinGroupType::*;
        match self {
            Trivial => "1",
            Z2 => "Z/2",
            Z3 => "Z/3",
            Z4 => "Z/4",
            D2 => "D2",
            Z6 => "Z/6",
            D3 => "D3",
            Z4xZ2 => "Z/4xZ/2",
            D2xZ2 => "D2xZ/2",
            D4 => "D4",
            D6 => "D6",
            A4 => "A4",
            Z6xZ2 => "Z/6xZ/2",
            D4xZ2 => "D4xZ/2",
            D6xZ2 => "D6xZ/2",
            S4 => "S4",
            A4xZ2 => "A4xZ/2",
            S4xZ2 => "S4xZ/2",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|t| t.name() == s)
    }

    pub fn order(self) -> usize {
        self.signature().order
    }

    /// Fingerprints of the reference models, checked against them in tests.
    pub fn signature(self) -> Signature {
        use FinGroupType::*;
        let (order, abelian, involutions, order3, order4, order6, center) = match self {
            Trivial => (1, true, 0, 0, 0, 0, 1),
            Z2 => (2, true, 1, 0, 0, 0, 2),
            Z3 => (3, true, 0, 2, 0, 0, 3),
            Z4 => (4, true, 1, 0, 2, 0, 4),
            D2 => (4, true, 3, 0, 0, 0, 4),
            Z6 => (6, true, 1, 2, 0, 2, 6),
            D3 => (6, false, 3, 2, 0, 0, 1),
            Z4xZ2 => (8, true, 3, 0, 4, 0, 8),
            D2xZ2 => (8, true, 7, 0, 0, 0, 8),
            D4 => (8, false, 5, 0, 2, 0, 2),
            D6 => (12, false, 7, 2, 0, 2, 2),
            A4 => (12, false, 3, 8, 0, 0, 1),
            Z6xZ2 => (12, true, 3, 2, 0, 6, 12),
            D4xZ2 => (16, false, 11, 0, 4, 0, 4),
            D6xZ2 => (24, false, 15, 2, 0, 6, 4),
            S4 => (24, false, 9, 8, 6, 0, 1),
            A4xZ2 => (24, false, 7, 8, 0, 8, 2),
            S4xZ2 => (48, false, 19, 8, 12, 8, 2),
        };
        Signature { order, abelian, involutions, order3, order4, order6, other: 0, center }
    }

    /// Permutation model of the type.
    pub fn model(self) -> FinGroup {
        use FinGroupType::*;
        let cyc = |n: u8, off: u8, deg: u8| -> Vec<u8> {
            (0..deg).map(|i| if i >= off && i < off + n { off + (i - off + 1) % n } else { i }).collect()
        };
        let refl = |n: u8, deg: u8| -> Vec<u8> { (0..deg).map(|i| if i < n { (n - i) % n } else { i }).collect() };
        let swap = |a: u8, b: u8, deg: u8| -> Vec<u8> {
            (0..deg)
                .map(|i| {
                    if i == a {
                        b
                    } else if i == b {
                        a
                    } else {
                        i
                    }
                })
                .collect()
        };
        let gens: Vec<Vec<u8>> = match self {
            Trivial => vec![vec![0]],
            Z2 => vec![cyc(2, 0, 2)],
            Z3 => vec![cyc(3, 0, 3)],
            Z4 => vec![cyc(4, 0, 4)],
            Z6 => vec![cyc(6, 0, 6)],
            D2 => vec![swap(0, 1, 4), swap(2, 3, 4)],
            D3 => vec![cyc(3, 0, 3), refl(3, 3)],
            D4 => vec![cyc(4, 0, 4), refl(4, 4)],
            D6 => vec![cyc(6, 0, 6), refl(6, 6)],
            Z4xZ2 => vec![cyc(4, 0, 6), swap(4, 5, 6)],
            Z6xZ2 => vec![cyc(6, 0, 8), swap(6, 7, 8)],
            D2xZ2 => vec![swap(0, 1, 6), swap(2, 3, 6), swap(4, 5, 6)],
            D4xZ2 => vec![cyc(4, 0, 6), refl(4, 6), swap(4, 5, 6)],
            D6xZ2 => vec![cyc(6, 0, 8), refl(6, 8), swap(6, 7, 8)],
            A4 => vec![cyc(3, 0, 4), vec![1, 0, 3, 2]],
            S4 => vec![cyc(4, 0, 4), swap(0, 1, 4)],
            A4xZ2 => vec![cyc(3, 0, 6), vec![1, 0, 3, 2, 4, 5], swap(4, 5, 6)],
            S4xZ2 => vec![cyc(4, 0, 6), swap(0, 1, 6), swap(4, 5, 6)],
        };
        FinGroup::from_permutations(&gens)
    }

    /// Embeds in S4.
    pub fn is_negligible(self) -> bool {
        use FinGroupType::*;
        matches!(self, Trivial | Z2 | Z3 | Z4 | D2 | D3 | D4 | A4 | S4)
    }
}

impl fmt::Display for FinGroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn models_have_declared_signatures() {
        for t in FinGroupType::ALL {
            let m = t.model();
            assert_eq!(m.signature(), t.signature(), "{t}");
            assert_eq!(m.iso_type().unwrap(), t);
        }
    }

    #[test]
    fn signatures_are_distinct() {
        for (i, a) in FinGroupType::ALL.iter().enumerate() {
            for b in &FinGroupType::ALL[i + 1..] {
                assert_ne!(a.signature(), b.signature());
            }
        }
    }

    #[test]
    fn negligible_iff_embeds_in_s4() {
        let s4 = FinGroupType::S4.model();
        let subs: Vec<FinGroup> = s4.subgroups().into_iter().map(|m| s4.subgroup(m)).collect();
        for t in FinGroupType::ALL {
            let m = t.model();
            let embeds = subs.iter().any(|s| find_isomorphism(&m, s).is_some());
            assert_eq!(embeds, t.is_negligible(), "{t}");
        }
        assert!(!FinGroupType::Z6.is_negligible());
    }

    #[test]
    fn isomorphism_search_distinguishes() {
        let d4 = FinGroupType::D4.model();
        let z4z2 = FinGroupType::Z4xZ2.model();
        assert!(find_isomorphism(&d4, &d4).is_some());
        assert!(find_isomorphism(&d4, &z4z2).is_none());
        let d6 = FinGroupType::D6.model();
        let d3z2 = FinGroup::from_permutations(&[vec![1, 2, 0, 3, 4], vec![0, 2, 1, 3, 4], vec![0, 1, 2, 4, 3]]);
        assert!(find_isomorphism(&d3z2, &d6).is_some());
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(FinGroupType::S4.model().subgroups().len(), 30);
        assert_eq!(FinGroupType::D4.model().subgroups().len(), 10);
    }
}
