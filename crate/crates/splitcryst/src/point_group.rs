//! Finite orthogonal matrix groups: closure, the standard point groups and
//! their named variants, poles, and abstract isomorphism types.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::exact::{qi, Lattice, Mat3, Vec3, Q};
use crate::fingroup::{FinGroup, FinGroupType};

/// A finite group of orthogonal matrices, stored as its sorted element list.
#[derive(Clone, Debug)]
pub struct PointGroup {
    elems: Vec<Mat3>,
    pub name: Option<String>,
}

impl PartialEq for PointGroup {
    fn eq(&self, o: &Self) -> bool {
        self.elems == o.elems
    }
}

impl Eq for PointGroup {}

pub const CLOSURE_BOUND: usize = 96;

pub fn generate_group(gens: &[Mat3]) -> Result<PointGroup, Error> {
    PointGroup::generate(gens)
}

impl PointGroup {
    pub fn generate(gens: &[Mat3]) -> Result<Self, Error> {
        for g in gens {
            if !g.is_orthogonal() {
                return Err(Error::NotOrthogonal(format!("{g}")));
            }
        }
        let mut seen: BTreeSet<Mat3> = BTreeSet::new();
        seen.insert(Mat3::identity());
        let mut queue = vec![Mat3::identity()];
        let mut i = 0;
        while i < queue.len() {
            for g in gens {
                let p = &queue[i] * g;
                if seen.insert(p.clone()) {
                    if seen.len() > CLOSURE_BOUND {
                        return Err(Error::ClosureBoundExceeded);
                    }
                    queue.push(p);
                }
            }
            i += 1;
        }
        Ok(PointGroup { elems: seen.into_iter().collect(), name: None })
    }

    /// Wraps a list already known to be closed.
    pub(crate) fn from_closed(mut elems: Vec<Mat3>) -> Self {
        elems.sort();
        elems.dedup();
        PointGroup { elems, name: None }
    }

    pub fn trivial() -> Self {
        Self::from_closed(vec![Mat3::identity()])
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = Some(name.to_string());
        self
    }

    pub fn elements(&self) -> &[Mat3] {
        &self.elems
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, m: &Mat3) -> bool {
        self.elems.binary_search(m).is_ok()
    }

    pub fn is_subgroup_of(&self, o: &PointGroup) -> bool {
        self.elems.iter().all(|m| o.contains(m))
    }

    pub fn has_minus_one(&self) -> bool {
        self.contains(&-&Mat3::identity())
    }

    /// Elements satisfying a predicate that cuts out a subgroup.
    pub fn subgroup_where(&self, pred: impl Fn(&Mat3) -> bool) -> PointGroup {
        Self::from_closed(self.elems.iter().filter(|m| pred(m)).cloned().collect())
    }

    pub fn rotations(&self) -> PointGroup {
        self.subgroup_where(|m| m.det().is_positive())
    }

    pub fn intersect(&self, o: &PointGroup) -> PointGroup {
        self.subgroup_where(|m| o.contains(m))
    }

    /// `g H g^-1`.
    pub fn conjugate(&self, g: &Mat3) -> PointGroup {
        let gi = g.transpose();
        Self::from_closed(self.elems.iter().map(|h| &(g * h) * &gi).collect())
    }

    pub fn join(&self, extra: &[Mat3]) -> Result<PointGroup, Error> {
        let mut gens: Vec<Mat3> = self.elems.clone();
        gens.extend_from_slice(extra);
        Self::generate(&gens)
    }

    pub fn element_order(m: &Mat3) -> usize {
        let mut x = m.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = &x * m;
            k += 1;
            assert!(k <= CLOSURE_BOUND, "element of infinite order");
        }
        k
    }

    pub fn fin_group(&self) -> FinGroup {
        let n = self.elems.len();
        let mut mul = vec![0u8; n * n];
        for (i, a) in self.elems.iter().enumerate() {
            for (j, b) in self.elems.iter().enumerate() {
                mul[i * n + j] = self.elems.binary_search(&(a * b)).expect("group not closed") as u8;
            }
        }
        FinGroup::from_table(n, mul).expect("valid group table")
    }

    pub fn iso_type(&self) -> Result<FinGroupType, Error> {
        self.fin_group().iso_type()
    }

    pub fn is_negligible(&self) -> Result<bool, Error> {
        Ok(self.iso_type()?.is_negligible())
    }

    pub fn preserves_lattice(&self, l: &Lattice) -> bool {
        self.elems.iter().all(|h| l.basis.iter().all(|b| l.contains(&(h * b))))
    }

    /// Representatives `t` of the right cosets `sub * t` in `self`, starting
    /// with the identity and then `-1` when available.
    pub fn right_transversal(&self, sub: &PointGroup) -> Result<Vec<Mat3>, Error> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::NotASubgroup(format!("{:?} in {:?}", sub.name, self.name)));
        }
        let minus = -&Mat3::identity();
        let mut order = vec![Mat3::identity()];
        if self.contains(&minus) {
            order.push(minus);
        }
        order.extend(self.elems.iter().cloned());
        let mut covered: BTreeSet<Mat3> = BTreeSet::new();
        let mut reps = Vec::new();
        for t in &order {
            if covered.contains(t) {
                continue;
            }
            for s in &sub.elems {
                covered.insert(s * t);
            }
            reps.push(t.clone());
        }
        Ok(reps)
    }

    /// Whether conjugation by `g` (which must normalize `self`) is inner.
    pub fn conjugation_is_inner(&self, g: &Mat3) -> bool {
        let gi = g.transpose();
        let target: Vec<Mat3> = self.elems.iter().map(|f| &(g * f) * &gi).collect();
        self.elems.iter().any(|k| {
            let ki = k.transpose();
            self.elems.iter().zip(&target).all(|(f, t)| &(k * f) * &ki == *t)
        })
    }

    pub fn normalized_by(&self, g: &Mat3) -> bool {
        self.conjugate(g) == *self
    }
}

/// One orbit of pole vectors under the rotation subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleOrbit {
    pub representative: [i64; 3],
    pub size: usize,
    pub stabilizer_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleData {
    pub rotation_order: usize,
    pub orbits: Vec<PoleOrbit>,
}

impl PoleData {
    /// `2 - 2/|H+| = sum over orbits of (1 - 1/alpha)`, exactly.
    pub fn counting_identity_holds(&self) -> bool {
        if self.orbits.is_empty() {
            return self.rotation_order == 1;
        }
        let n = qi(self.rotation_order as i64);
        let lhs = qi(2) - qi(2) / n;
        let rhs =
            self.orbits.iter().fold(Q::zero(), |acc, o| acc + Q::one() - Q::one() / qi(o.stabilizer_order as i64));
        lhs == rhs
    }

    pub fn orders(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.stabilizer_order).collect()
    }
}

/// Axis direction of a rotation other than the identity.
pub fn rotation_axis(r: &Mat3) -> Vec3 {
    let d = r - &Mat3::identity();
    let rows = [d.row(0), d.row(1), d.row(2)];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let c = rows[i].cross(&rows[j]);
        if !c.is_zero() {
            return c;
        }
    }
    panic!("not a nontrivial rotation: {r}");
}

fn int_vec(v: &Vec3) -> [i64; 3] {
    v.primitive_integer().map(|c| c.to_i64().unwrap())
}

pub fn pole_data(h: &PointGroup) -> PoleData {
    let rot = h.rotations();
    let mut poles: BTreeSet<[i64; 3]> = BTreeSet::new();
    for r in rot.elements().iter().filter(|r| !r.is_identity()) {
        let a = int_vec(&rotation_axis(r));
        poles.insert(a);
        poles.insert(a.map(|c| -c));
    }
    let act = |m: &Mat3, p: &[i64; 3]| int_vec(&(m * &Vec3::ints(*p)));
    let mut orbits = Vec::new();
    let mut done: BTreeSet<[i64; 3]> = BTreeSet::new();
    for p in &poles {
        if done.contains(p) {
            continue;
        }
        let orbit: BTreeSet<[i64; 3]> = rot.elements().iter().map(|m| act(m, p)).collect();
        done.extend(orbit.iter().copied());
        let stab = rot.elements().iter().filter(|m| act(m, p) == *p).count();
        // Prefer a positive leading coordinate, then the lexicographically least.
        let rep = *orbit.iter().min_by_key(|v| (v[0] <= 0, **v)).unwrap();
        orbits.push(PoleOrbit { representative: rep, size: orbit.len(), stabilizer_order: stab });
    }
    orbits.sort_by_key(|o| (o.stabilizer_order, o.representative));
    PoleData { rotation_order: rot.order(), orbits }
}

/// Names of the 32 standard point groups.
pub const STANDARD_NAMES: [&str; 32] = [
    "C1+", "C2+", "C3+", "C4+", "C6+", "D2+", "D3+", "D4+", "D6+", "A4+", "S4+", "C1+x(-1)", "C2+x(-1)", "C3+x(-1)",
    "C4+x(-1)", "C6+x(-1)", "D2+x(-1)", "D3+x(-1)", "D4+x(-1)", "D6+x(-1)", "A4+x(-1)", "S4+x(-1)", "C'_2", "C'_4",
    "C'_6", "D'_2", "D'_3", "D'_4", "D''_4", "D'_6", "D''_6", "S'_4",
];

pub const ORIENTATION_PRESERVING: [&str; 11] =
    ["C1+", "C2+", "C3+", "C4+", "C6+", "D2+", "D3+", "D4+", "D6+", "A4+", "S4+"];

const C3: &str = "0 1 0; 0 0 1; 1 0 0";
const C6: &str = "2/3 2/3 -1/3; -1/3 2/3 2/3; 2/3 -1/3 2/3";
const D6_FLIP: &str = "0 -1 0; -1 0 0; 0 0 -1";
const XY: &str = "0 1 0; 1 0 0; 0 0 1";
const XZ: &str = "0 0 1; 0 1 0; 1 0 0";
const D_LINE: &str = "2/3 -1/3 2/3; -1/3 2/3 2/3; 2/3 2/3 -1/3";
const E_LINE: &str = "1/3 -2/3 -2/3; -2/3 1/3 -2/3; -2/3 -2/3 1/3";
const SIX_BAR: &str = "-1/3 2/3 2/3; 2/3 2/3 -1/3; 2/3 -1/3 2/3";

fn base_generators(name: &str) -> Option<Vec<&'static str>> {
    let g: Vec<&'static str> = match name {
        "C1+" => vec![],
        "C2+" => vec!["-1 0 0; 0 -1 0; 0 0 1"],
        "C3+" => vec![C3],
        "C4+" => vec!["0 -1 0; 1 0 0; 0 0 1"],
        "C6+" => vec![C6],
        "D2+" => vec!["-1 0 0; 0 1 0; 0 0 -1", "-1 0 0; 0 -1 0; 0 0 1"],
        "D3+" => vec![C3, D6_FLIP],
        "D4+" => vec!["0 1 0; -1 0 0; 0 0 1", "1 0 0; 0 -1 0; 0 0 -1"],
        "D6+" => vec![C6, D6_FLIP],
        "A4+" => vec!["1 0 0; 0 -1 0; 0 0 -1", C3],
        "S4+" => vec!["1 0 0; 0 0 1; 0 -1 0", C3],
        "C'_2" => vec!["1 0 0; 0 1 0; 0 0 -1"],
        "C'_4" => vec!["0 1 0; -1 0 0; 0 0 -1"],
        "C'_6" => vec!["-2/3 -2/3 1/3; 1/3 -2/3 -2/3; -2/3 1/3 -2/3"],
        "D'_2" => vec!["-1 0 0; 0 1 0; 0 0 1", "1 0 0; 0 -1 0; 0 0 1"],
        "D'_3" => vec![C3, XY],
        "D'_4" => vec!["0 -1 0; -1 0 0; 0 0 1", "1 0 0; 0 -1 0; 0 0 -1"],
        "D''_4" => vec!["0 -1 0; -1 0 0; 0 0 1", "-1 0 0; 0 1 0; 0 0 1"],
        "D'_6" => vec!["1/3 -2/3 -2/3; -2/3 -2/3 1/3; -2/3 1/3 -2/3", XY],
        "D''_6" => vec![SIX_BAR, XY],
        "S'_4" => vec![C3, "0 0 -1; 0 1 0; -1 0 0"],
        "Dhat'_4" => vec!["0 1 0; 1 0 0; 0 0 -1", "-1 0 0; 0 1 0; 0 0 1"],
        "Dhat'_6" => vec![SIX_BAR, D6_FLIP],
        "D+_4_1" => vec!["1 0 0; 0 0 1; 0 -1 0", "-1 0 0; 0 1 0; 0 0 -1"],
        "D+_4_2" => vec!["0 0 -1; 0 1 0; 1 0 0", "1 0 0; 0 -1 0; 0 0 -1"],
        "D'_2_1" => vec!["1 0 0; 0 -1 0; 0 0 1", "1 0 0; 0 1 0; 0 0 -1"],
        "D'_2_2" => vec!["-1 0 0; 0 1 0; 0 0 1", "1 0 0; 0 1 0; 0 0 -1"],
        "<A,B>" => vec![XY, "1 0 0; 0 1 0; 0 0 -1"],
        "<A,C>" => vec![XY, "-1 0 0; 0 -1 0; 0 0 1"],
        "<A,D>" => vec![XY, D_LINE],
        "<D,E>" => vec![D_LINE, E_LINE],
        "<E,F>" => vec![E_LINE, XZ],
        _ => return None,
    };
    Some(g)
}

/// The point group with the given ASCII name; `x(-1)` adjoins the antipodal map.
pub fn standard_point_group(name: &str) -> Result<PointGroup, Error> {
    let (base, anti) = match name.strip_suffix("x(-1)") {
        Some(b) => (b, true),
        None => (name, false),
    };
    let gens = base_generators(base).ok_or_else(|| Error::UnknownName(name.to_string()))?;
    let mut mats: Vec<Mat3> = gens.iter().map(|s| Mat3::parse(s)).collect();
    if anti {
        mats.push(-&Mat3::identity());
    }
    Ok(PointGroup::generate(&mats)?.with_name(name))
}

/// Every name accepted by [`standard_point_group`] that is not one of the 32.
pub const VARIANT_NAMES: [&str; 13] = [
    "Dhat'_4",
    "Dhat'_6",
    "D+_4_1",
    "D+_4_2",
    "D+_4_1x(-1)",
    "D+_4_2x(-1)",
    "D'_2_1",
    "D'_2_2",
    "<A,B>",
    "<A,C>",
    "<A,D>",
    "<D,E>",
    "<E,F>",
];

/// Named group tables keyed by name, built once per caller.
pub fn named_groups() -> BTreeMap<String, PointGroup> {
    STANDARD_NAMES
        .iter()
        .chain(VARIANT_NAMES.iter())
        .map(|n| (n.to_string(), standard_point_group(n).expect("named group")))
        .collect()
}

/// Abstract type of a matrix group, shorthand for use in tables.
pub fn finite_iso_type(h: &PointGroup) -> Result<FinGroupType, Error> {
    h.iso_type()
}

pub fn is_negligible_finite(h: &PointGroup) -> Result<bool, Error> {
    h.is_negligible()
}

pub fn preserves_lattice(h: &PointGroup, l: &Lattice) -> bool {
    h.preserves_lattice(l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_examples() {
        assert_eq!(standard_point_group("S4+").unwrap().order(), 24);
        assert_eq!(generate_group(&[Mat3::identity()]).unwrap().order(), 1);
        assert_eq!(standard_point_group("D6+").unwrap().order(), 12);
        assert!(matches!(generate_group(&[Mat3::diag(2, 1, 1)]), Err(Error::NotOrthogonal(_))));
        assert!(matches!(standard_point_group("Q8"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn closure_bound() {
        // Rotation by an angle with cosine 3/5 has infinite order.
        let r = Mat3::parse("3/5 -4/5 0; 4/5 3/5 0; 0 0 1");
        assert!(matches!(generate_group(&[r]), Err(Error::ClosureBoundExceeded)));
    }

    #[test]
    fn s4_is_signed_permutations_of_det_one() {
        let g = standard_point_group("S4+").unwrap();
        for m in g.elements() {
            assert!(m.is_integral());
            assert_eq!(m.det(), qi(1));
        }
        let d = standard_point_group("D''_4").unwrap();
        assert_eq!(d.order(), 8);
        assert!(d.elements().iter().all(|m| m.0[2][2] == qi(1)));
    }

    #[test]
    fn orientation_preserving_orders() {
        let orders: Vec<usize> =
            ORIENTATION_PRESERVING.iter().map(|n| standard_point_group(n).unwrap().order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 4, 6, 4, 6, 8, 12, 12, 24]);
        for n in ORIENTATION_PRESERVING {
            let h = standard_point_group(n).unwrap();
            let hm = standard_point_group(&format!("{n}x(-1)")).unwrap();
            assert_eq!(hm.order(), 2 * h.order());
        }
    }

    #[test]
    fn lattice_preservation() {
        let l = Lattice::standard();
        assert!(standard_point_group("S4+x(-1)").unwrap().preserves_lattice(&l));
        assert!(!standard_point_group("D6+x(-1)").unwrap().preserves_lattice(&l));
        assert!(PointGroup::trivial().preserves_lattice(&l));
    }

    #[test]
    fn poles() {
        let p = pole_data(&standard_point_group("S4+").unwrap());
        assert_eq!(p.orders(), vec![2, 3, 4]);
        assert!(p.counting_identity_holds());
        assert!(pole_data(&PointGroup::trivial()).orbits.is_empty());
        let p6 = pole_data(&standard_point_group("D6+x(-1)").unwrap());
        let reps: Vec<[i64; 3]> = p6.orbits.iter().map(|o| o.representative).collect();
        assert!(reps.contains(&[1, 1, 1]));
        assert!(reps.contains(&[1, -1, 0]));
        assert!(reps.contains(&[1, -2, 1]));
    }

    #[test]
    fn iso_examples() {
        assert_eq!(standard_point_group("S4+x(-1)").unwrap().iso_type().unwrap(), FinGroupType::S4xZ2);
        assert_eq!(standard_point_group("D''_4").unwrap().iso_type().unwrap(), FinGroupType::D4);
        assert_eq!(PointGroup::trivial().iso_type().unwrap(), FinGroupType::Trivial);
        assert!(standard_point_group("D4+").unwrap().is_negligible().unwrap());
        assert!(!standard_point_group("D4+x(-1)").unwrap().is_negligible().unwrap());
        assert!(!standard_point_group("C6+").unwrap().is_negligible().unwrap());
    }

    #[test]
    fn transversal_covers() {
        let big = standard_point_group("S4+x(-1)").unwrap();
        let sub = standard_point_group("A4+x(-1)").unwrap();
        let t = big.right_transversal(&sub).unwrap();
        assert_eq!(t.len(), 2);
        assert!(big.right_transversal(&standard_point_group("C6+").unwrap()).is_err());
    }

    #[test]
    fn inner_automorphisms() {
        let d2 = standard_point_group("D'_2").unwrap();
        let swap = Mat3::parse(XY);
        assert!(d2.normalized_by(&swap));
        assert!(!d2.conjugation_is_inner(&swap));
        let d4 = standard_point_group("D''_4").unwrap();
        assert!(d4.conjugation_is_inner(&Mat3::parse("0 -1 0; 1 0 0; 0 0 1")));
    }
}
