//! Fundamental polyhedra for the seven maximal groups, their side pairings,
//! the subproper check and the subdivision of bad sides and ridges.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::angle::{dihedral_angle, Angle};
use crate::catalog::CrystGroup;
use crate::error::Error;
use crate::exact::{qi, qr, qs, Affine, Mat3, Vec3, Q};
use crate::kgroup::{smith_normal_form, IntMatrix};
use crate::point_group::{rotation_axis, PointGroup};

/// The half-space `normal . x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub normal: Vec3,
    pub offset: Q,
}

impl Side {
    pub fn value(&self, p: &Vec3) -> Q {
        &self.normal.dot(p) - &self.offset
    }

    pub fn contains(&self, p: &Vec3) -> bool {
        self.value(p).is_zero()
    }
}

/// `map` carries side `partner` onto side `side`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    pub side: usize,
    pub partner: usize,
    pub map: Affine,
}

#[derive(Clone, Debug)]
pub struct Domain {
    pub index: usize,
    pub sides: Vec<Side>,
    pub pairings: Vec<Pairing>,
}

/// A ridge of the polyhedron: the segment `a`-`b` shared by two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ridge {
    pub sides: (usize, usize),
    pub a: Vec3,
    pub b: Vec3,
}

impl Ridge {
    pub fn point(&self, s: &Q) -> Vec3 {
        &self.a + &(&self.b - &self.a).scale(s)
    }

    pub fn midpoint(&self) -> Vec3 {
        self.point(&qr(1, 2))
    }

    /// Interior points, excluding endpoints.
    pub fn contains_interior(&self, p: &Vec3) -> bool {
        match param_on_segment(&self.a, &self.b, p) {
            Some(s) => s.is_positive() && s < Q::one(),
            None => false,
        }
    }
}

/// `s` with `p = a + s (b - a)`, if `p` is on the line through `a` and `b`.
pub fn param_on_segment(a: &Vec3, b: &Vec3, p: &Vec3) -> Option<Q> {
    let d = b - a;
    let w = p - a;
    if !d.cross(&w).is_zero() {
        return None;
    }
    Some(w.dot(&d) / d.norm2())
}

/// Reflection in the plane `n . x = c`.
pub fn reflection(n: &Vec3, c: &Q) -> Affine {
    let nn = n.norm2();
    let two = qi(2);
    let m = Mat3(core::array::from_fn(|i| {
        core::array::from_fn(|j| {
            let id = if i == j { Q::one() } else { Q::zero() };
            id - &two * &n.0[i] * &n.0[j] / &nn
        })
    }));
    Affine { t: n.scale(&(&two * c / &nn)), m }
}

enum Map {
    Reflect,
    To(&'static str, &'static str, usize),
}

fn build(index: usize, data: &[(&str, &str, Map)]) -> Domain {
    let mut sides = Vec::new();
    for (n, c, _) in data {
        sides.push(Side { normal: Vec3::parse(n), offset: qs(c) });
    }
    let mut pairings = Vec::new();
    for (i, (_, _, m)) in data.iter().enumerate() {
        let (map, partner) = match m {
            Map::Reflect => (reflection(&sides[i].normal, &sides[i].offset), i),
            Map::To(t, mat, partner) => {
                (Affine::new(Vec3::parse(t), Mat3::parse(mat)).expect("orthogonal pairing"), *partner - 1)
            }
        };
        pairings.push(Pairing { side: i, partner, map });
    }
    Domain { index, sides, pairings }
}

const ANTI_XZ: &str = "0 0 -1; 0 -1 0; -1 0 0";

impl Domain {
    /// The polyhedron and side pairing for the maximal group on lattice `i`.
    pub fn gamma(i: usize) -> Result<Domain, Error> {
        use Map::*;
        let d = match i {
            1 => build(
                1,
                &[
                    ("0 -1 1", "0", Reflect),
                    ("0 0 -1", "0", Reflect),
                    ("-1 1 0", "0", Reflect),
                    ("1 0 0", "1/2", Reflect),
                ],
            ),
            2 => build(
                2,
                &[
                    ("0 -1 1", "0", Reflect),
                    ("0 0 -1", "0", Reflect),
                    ("-1 1 0", "0", Reflect),
                    ("1 0 0", "1/2", Reflect),
                    ("1 1 1", "3/4", To("1/2 1/2 1/2", ANTI_XZ, 5)),
                ],
            ),
            3 => build(
                3,
                &[
                    ("0 -1 1", "0", Reflect),
                    ("0 0 -1", "0", Reflect),
                    ("-1 1 0", "0", Reflect),
                    ("1 1 0", "1/2", To("1/2 1/2 0", "0 -1 0; -1 0 0; 0 0 1", 4)),
                ],
            ),
            4 => build(
                4,
                &[
                    ("0 -1 0", "0", Reflect),
                    ("1 0 1", "1/2", To("1/2 0 1/2", "-1 0 0; 0 1 0; 0 0 -1", 2)),
                    ("0 1 0", "1/2", Reflect),
                    ("-1 0 0", "0", Reflect),
                    ("0 0 -1", "0", Reflect),
                ],
            ),
            5 => build(
                5,
                &[
                    ("1 1 1", "3/2", Reflect),
                    ("0 -1 1", "1", Reflect),
                    ("-1 -1 -1", "0", Reflect),
                    ("-2 1 1", "0", Reflect),
                    ("1 0 -1", "0", Reflect),
                ],
            ),
            6 => build(
                6,
                &[
                    ("-1 0 1", "0", Reflect),
                    ("5 2 5", "3", To("2/3 -1/3 2/3", ANTI_XZ, 2)),
                    ("1 -1 0", "1", Reflect),
                    ("0 1 -1", "0", Reflect),
                    ("-1 -1 -1", "0", To("0 0 0", "0 -1 0; -1 0 0; 0 0 -1", 5)),
                ],
            ),
            7 => build(
                7,
                &[
                    ("1 -2 1", "1", To("1/3 -2/3 1/3", ANTI_XZ, 1)),
                    ("1 1 1", "3/2", To("1 1 1", "1 0 0; 0 1 0; 0 0 1", 5)),
                    ("1 0 -1", "0", Reflect),
                    ("-2 1 1", "0", To("0 0 0", "-1 0 0; 0 0 -1; 0 -1 0", 4)),
                    ("-1 -1 -1", "3/2", To("-1 -1 -1", "1 0 0; 0 1 0; 0 0 1", 2)),
                ],
            ),
            _ => return Err(Error::UnknownName(format!("domain {i}"))),
        };
        Ok(d)
    }

    /// Explicit reflections in the data, i.e. `phi_S` is the reflection in `S`.
    pub fn is_reflection(&self, side: usize) -> bool {
        let p = &self.pairings[side];
        p.partner == side && p.map == reflection(&self.sides[side].normal, &self.sides[side].offset)
    }

    pub fn inside(&self, p: &Vec3) -> bool {
        self.sides.iter().all(|s| !s.value(p).is_positive())
    }

    pub fn sides_through(&self, p: &Vec3) -> Vec<usize> {
        (0..self.sides.len()).filter(|&i| self.sides[i].contains(p)).collect()
    }

    /// Vertices, computed from all triples of side planes.
    pub fn vertices(&self) -> Vec<Vec3> {
        let n = self.sides.len();
        let mut out: BTreeSet<Vec3> = BTreeSet::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let m = Mat3::from_rows(&self.sides[i].normal, &self.sides[j].normal, &self.sides[k].normal);
                    let Some(inv) = m.inverse() else { continue };
                    let rhs = Vec3::new(
                        self.sides[i].offset.clone(),
                        self.sides[j].offset.clone(),
                        self.sides[k].offset.clone(),
                    );
                    let p = &inv * &rhs;
                    if self.inside(&p) {
                        out.insert(p);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn side_vertices(&self, side: usize) -> Vec<Vec3> {
        self.vertices().into_iter().filter(|v| self.sides[side].contains(v)).collect()
    }

    pub fn ridges(&self) -> Result<Vec<Ridge>, Error> {
        let verts = self.vertices();
        let n = self.sides.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let on: Vec<&Vec3> =
                    verts.iter().filter(|v| self.sides[i].contains(v) && self.sides[j].contains(v)).collect();
                match on.len() {
                    0 | 1 => {}
                    2 => out.push(Ridge { sides: (i, j), a: on[0].clone(), b: on[1].clone() }),
                    _ => return Err(Error::InvalidDomain(format!("sides {} and {} share a polygon", i + 1, j + 1))),
                }
            }
        }
        Ok(out)
    }

    pub fn dihedral_angle(&self, i: usize, j: usize) -> Angle {
        dihedral_angle(&self.sides[i].normal, &self.sides[j].normal)
    }

    fn pairing(&self, side: usize) -> &Pairing {
        &self.pairings[side]
    }

    /// Boundedness, facets, the pairing axioms, and `phi_S(S') = S`.
    pub fn validate(&self) -> Result<(), Error> {
        let verts = self.vertices();
        if verts.len() < 4 {
            return Err(Error::InvalidDomain(format!("{} vertices", verts.len())));
        }
        let mut centroid = Vec3::zero();
        for v in &verts {
            centroid = &centroid + v;
        }
        let centroid = centroid.scale(&Q::new(BigInt::one(), BigInt::from(verts.len())));
        if !self.sides.iter().all(|s| s.value(&centroid).is_negative()) {
            return Err(Error::InvalidDomain("empty interior".into()));
        }
        for v in &verts {
            if self.sides_through(v).len() < 3 {
                return Err(Error::InvalidDomain(format!("vertex {v} on fewer than three sides")));
            }
        }
        for i in 0..self.sides.len() {
            if self.side_vertices(i).len() < 3 {
                return Err(Error::InvalidDomain(format!("side {} is not a facet", i + 1)));
            }
        }
        for p in &self.pairings {
            let back = self.pairing(p.partner);
            if back.partner != p.side || back.map != p.map.inverse() {
                return Err(Error::InvalidDomain(format!(
                    "pairing of side {} is not inverse to its partner",
                    p.side + 1
                )));
            }
            let from: BTreeSet<Vec3> = self.side_vertices(p.partner).iter().map(|v| p.map.apply(v)).collect();
            let to: BTreeSet<Vec3> = self.side_vertices(p.side).into_iter().collect();
            if from != to {
                return Err(Error::InvalidDomain(format!("pairing of side {} does not match sides", p.side + 1)));
            }
        }
        Ok(())
    }

    /// The side pairing generates `L ⋊ H`: maps lie in the group, their linear
    /// parts generate `H`, and the translations they generate are all of `L`.
    pub fn generates(&self, g: &CrystGroup) -> Result<(), Error> {
        for p in &self.pairings {
            if !g.point_group.contains(&p.map.m) || !g.lattice.contains(&p.map.t) {
                return Err(Error::InvalidDomain(format!("pairing of side {} is not in {}", p.side + 1, g.label)));
            }
        }
        let maps: Vec<&Affine> = self.pairings.iter().map(|p| &p.map).collect();
        let lin: Vec<Mat3> = maps.iter().map(|m| m.m.clone()).collect();
        if PointGroup::generate(&lin)? != g.point_group {
            return Err(Error::InvalidDomain("pairings do not generate the point group".into()));
        }
        // Coset representatives by linear part, then Schreier translations.
        let mut reps: BTreeMap<Mat3, Affine> = BTreeMap::new();
        reps.insert(Mat3::identity(), Affine::identity());
        let mut queue = vec![Mat3::identity()];
        let mut i = 0;
        while i < queue.len() {
            let cur = reps[&queue[i]].clone();
            for m in &maps {
                let next = cur.compose(m);
                if !reps.contains_key(&next.m) {
                    queue.push(next.m.clone());
                    reps.insert(next.m.clone(), next);
                }
            }
            i += 1;
        }
        let mut rows = Vec::new();
        for r in reps.values() {
            for m in &maps {
                let prod = r.compose(m);
                let back = &reps[&prod.m];
                let tr = prod.compose(&back.inverse());
                debug_assert!(tr.m.is_identity());
                let c = g.lattice.coords(&tr.t);
                rows.push(c.0.iter().map(|x| x.to_integer()).collect::<Vec<_>>());
            }
        }
        let snf = smith_normal_form(&IntMatrix::from_rows(rows));
        if snf.rank() != 3 || !snf.factors.iter().all(|f| f.is_one()) {
            return Err(Error::InvalidDomain("pairings do not generate the translation lattice".into()));
        }
        Ok(())
    }
}

/// One ridge cycle with its exact angle sum.
#[derive(Clone, Debug)]
pub struct RidgeCycle {
    /// Side pairs (0-based) of the ridges met, in discovery order.
    pub ridges: Vec<(usize, usize)>,
    pub points: Vec<Vec3>,
    pub dihedral: bool,
    pub sum: Angle,
    /// The cycle sum is `pi/k` (dihedral) or `2 pi/k` (cyclic).
    pub k: u32,
}

#[derive(Clone, Debug)]
pub struct SubproperReport {
    pub cycles: Vec<RidgeCycle>,
    /// Ridges met twice by their own cycle, split at their midpoints.
    pub bad_ridges: Vec<Ridge>,
}

/// Generic point on a ridge; the midpoint may be fixed by the cycle maps.
fn ridge_sample(r: &Ridge) -> Vec3 {
    r.point(&qr(2, 7))
}

pub const CYCLE_CAP: usize = 24;

pub fn verify_subproper(d: &Domain) -> Result<SubproperReport, Error> {
    let ridges = d.ridges()?;
    let ridge_of = |pair: (usize, usize), p: &Vec3| -> Option<usize> {
        ridges.iter().position(|r| r.sides == pair && (r.contains_interior(p)))
    };
    let mut visited = vec![false; ridges.len()];
    let mut cycles = Vec::new();
    let mut bad = Vec::new();
    for start in 0..ridges.len() {
        if visited[start] {
            continue;
        }
        let mut nodes: Vec<(Vec3, (usize, usize))> = vec![(ridge_sample(&ridges[start]), ridges[start].sides)];
        let mut i = 0;
        while i < nodes.len() {
            let (q, (a, b)) = nodes[i].clone();
            for x in [a, b] {
                let p = d.pairing(x);
                let img = p.map.inverse().apply(&q);
                let through = d.sides_through(&img);
                if through.len() != 2 || !through.contains(&p.partner) {
                    return Err(Error::NotSubproper(format!("ridge point {q} maps to {img} off a ridge")));
                }
                let pair = (through[0], through[1]);
                if !nodes.iter().any(|(pt, pr)| *pt == img && *pr == pair) {
                    nodes.push((img, pair));
                }
            }
            if nodes.len() > CYCLE_CAP {
                return Err(Error::NotSubproper(format!(
                    "cycle from ridge {:?} exceeds {CYCLE_CAP} steps",
                    ridges[start].sides
                )));
            }
            i += 1;
        }
        let mut per_ridge: BTreeMap<usize, usize> = BTreeMap::new();
        let mut sum = Angle::default();
        let mut dihedral = false;
        for (p, (a, b)) in &nodes {
            let r = ridge_of((*a, *b), p).ok_or_else(|| Error::NotSubproper(format!("{p} is not inside a ridge")))?;
            visited[r] = true;
            *per_ridge.entry(r).or_default() += 1;
            sum = &sum + &d.dihedral_angle(*a, *b);
            dihedral |= d.is_reflection(*a) || d.is_reflection(*b);
        }
        for (r, n) in per_ridge {
            if n > 1 {
                bad.push(ridges[r].clone());
            }
        }
        let pi = sum
            .as_pi_multiple()
            .ok_or_else(|| Error::NotSubproper(format!("angle sum {sum} is not a multiple of pi")))?;
        let whole = if dihedral { Q::one() } else { qi(2) };
        let k = &whole / pi;
        if !pi.is_positive() || !k.is_integer() {
            return Err(Error::NotSubproper(format!("angle sum {sum} at ridge {:?}", ridges[start].sides)));
        }
        let k: u32 = k.to_integer().try_into().map_err(|_| Error::NotSubproper("angle sum too small".into()))?;
        cycles.push(RidgeCycle {
            ridges: nodes.iter().map(|(_, s)| *s).collect(),
            points: nodes.into_iter().map(|(p, _)| p).collect(),
            dihedral,
            sum,
            k,
        });
    }
    Ok(SubproperReport { cycles, bad_ridges: bad })
}

/// A self-paired side whose map is a half-turn about a line in the side.
#[derive(Clone, Debug)]
pub struct BadSide {
    pub side: usize,
    pub segment: (Vec3, Vec3),
}

pub fn bad_sides(d: &Domain) -> Result<Vec<BadSide>, Error> {
    let mut out = Vec::new();
    for p in &d.pairings {
        if p.partner != p.side || d.is_reflection(p.side) {
            continue;
        }
        let m = &p.map.m;
        if m.det() != qi(1) || m.trace() != qi(-1) {
            return Err(Error::InvalidDomain(format!("self-pairing of side {} is not a half-turn", p.side + 1)));
        }
        let dir = rotation_axis(m);
        if !dir.dot(&p.map.t).is_zero() {
            return Err(Error::InvalidDomain(format!("side {} is paired by a screw motion", p.side + 1)));
        }
        let x0 = p.map.t.scale(&qr(1, 2));
        let side = &d.sides[p.side];
        if !side.contains(&x0) || !side.normal.dot(&dir).is_zero() {
            return Err(Error::InvalidDomain(format!("axis of side {} leaves the side", p.side + 1)));
        }
        // Clip x0 + s dir against every side.
        let mut lo: Option<Q> = None;
        let mut hi: Option<Q> = None;
        for s in &d.sides {
            let a = s.normal.dot(&dir);
            let b = -s.value(&x0);
            if a.is_zero() {
                if b.is_negative() {
                    return Err(Error::InvalidDomain("axis misses the polyhedron".into()));
                }
                continue;
            }
            let t = &b / &a;
            if a.is_positive() {
                hi = Some(hi.map_or(t.clone(), |h| if t < h { t.clone() } else { h }));
            } else {
                lo = Some(lo.map_or(t.clone(), |l| if t > l { t.clone() } else { l }));
            }
        }
        let (lo, hi) = (lo.unwrap(), hi.unwrap());
        if lo >= hi {
            return Err(Error::InvalidDomain("axis segment is degenerate".into()));
        }
        let mut e = [&x0 + &dir.scale(&lo), &x0 + &dir.scale(&hi)];
        e.sort();
        let [a, b] = e;
        out.push(BadSide { side: p.side, segment: (a, b) });
    }
    Ok(out)
}

/// The polyhedron cut into cells so that stabilizers fix cells pointwise.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub vertices: Vec<Vec3>,
    /// Points added beyond the polyhedron's vertices.
    pub new_vertices: Vec<Vec3>,
    pub edges: Vec<(Vec3, Vec3)>,
    /// One generic point per side.
    pub faces: Vec<(usize, Vec3)>,
    pub interior: Vec3,
    pub bad_sides: Vec<BadSide>,
    pub bad_ridges: Vec<Ridge>,
}

fn split_segment(a: &Vec3, b: &Vec3, cuts: &[Vec3]) -> Vec<(Vec3, Vec3)> {
    let mut pts: Vec<(Q, Vec3)> = vec![(Q::zero(), a.clone()), (Q::one(), b.clone())];
    for c in cuts {
        if let Some(s) = param_on_segment(a, b, c) {
            if s.is_positive() && s < Q::one() && !pts.iter().any(|(_, p)| p == c) {
                pts.push((s, c.clone()));
            }
        }
    }
    pts.sort();
    pts.windows(2).map(|w| (w[0].1.clone(), w[1].1.clone())).collect()
}

pub fn subdivide(d: &Domain) -> Result<Subdivision, Error> {
    let report = verify_subproper(d)?;
    let bad = bad_sides(d)?;
    let base = d.vertices();
    let mut extra: BTreeSet<Vec3> = BTreeSet::new();
    for b in &bad {
        extra.insert(b.segment.0.clone());
        extra.insert(b.segment.1.clone());
    }
    for r in &report.bad_ridges {
        extra.insert(r.midpoint());
    }
    let new_vertices: Vec<Vec3> = extra.iter().filter(|p| !base.contains(p)).cloned().collect();
    let mut vertices = base.clone();
    vertices.extend(new_vertices.iter().cloned());
    vertices.sort();
    let mut edges = Vec::new();
    for r in d.ridges()? {
        edges.extend(split_segment(&r.a, &r.b, &new_vertices));
    }
    for b in &bad {
        edges.extend(split_segment(&b.segment.0, &b.segment.1, &vertices));
    }
    let mut faces = Vec::new();
    for i in 0..d.sides.len() {
        let vs = d.side_vertices(i);
        let mut acc = Vec3::zero();
        let mut w = Q::zero();
        for (k, v) in vs.iter().enumerate() {
            let wk = qi(((k + 1) * (k + 1) + 1) as i64);
            acc = &acc + &v.scale(&wk);
            w += wk;
        }
        faces.push((i, acc.scale(&w.recip())));
    }
    let mut acc = Vec3::zero();
    for (k, v) in base.iter().enumerate() {
        acc = &acc + &v.scale(&qi((k + 2) as i64));
    }
    let total: i64 = (0..base.len()).map(|k| (k + 2) as i64).sum();
    let interior = acc.scale(&qr(1, total));
    Ok(Subdivision { vertices, new_vertices, edges, faces, interior, bad_sides: bad, bad_ridges: report.bad_ridges })
}

pub fn side_label(i: usize) -> String {
    format!("S{}", i + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_domains_validate() {
        for i in 1..=7 {
            let d = Domain::gamma(i).unwrap();
            d.validate().unwrap_or_else(|e| panic!("Gamma_{i}: {e}"));
            verify_subproper(&d).unwrap_or_else(|e| panic!("Gamma_{i}: {e}"));
        }
    }

    #[test]
    fn pairings_generate_the_group() {
        let cat = crate::catalog::catalog().unwrap();
        for i in 1..=7 {
            let d = Domain::gamma(i).unwrap();
            d.generates(crate::catalog::gamma(&cat, i)).unwrap_or_else(|e| panic!("Gamma_{i}: {e}"));
        }
    }

    #[test]
    fn gamma1_angles() {
        let d = Domain::gamma(1).unwrap();
        let want = [(0, 1, "pi/4"), (0, 2, "pi/3"), (0, 3, "pi/2"), (1, 2, "pi/2"), (1, 3, "pi/2"), (2, 3, "pi/4")];
        for (i, j, s) in want {
            assert_eq!(alloc::string::ToString::to_string(&d.dihedral_angle(i, j)), s);
        }
        let v = d.vertices();
        assert_eq!(v.len(), 4);
        assert!(v.contains(&Vec3::parse("1/2 1/2 1/2")));
    }

    #[test]
    fn gamma2_half_turn_cycle() {
        let d = Domain::gamma(2).unwrap();
        let r = verify_subproper(&d).unwrap();
        let c = r.cycles.iter().find(|c| c.ridges.contains(&(1, 4))).unwrap();
        assert_eq!(c.sum, Angle::pi_times(qi(1)));
        assert_eq!(c.points.len(), 2);
        let bad = bad_sides(&d).unwrap();
        assert_eq!(bad.len(), 1);
        let (a, b) = &bad[0].segment;
        assert_eq!((a, b), (&Vec3::parse("1/4 1/4 1/4"), &Vec3::parse("1/2 1/4 0")));
    }

    #[test]
    fn gamma7_cyclic_ridge() {
        let d = Domain::gamma(7).unwrap();
        let r = verify_subproper(&d).unwrap();
        let c = r.cycles.iter().find(|c| c.ridges.contains(&(0, 3))).unwrap();
        assert!(!c.dihedral);
        assert_eq!(c.sum, Angle::pi_times(qr(2, 3)));
        let s = subdivide(&d).unwrap();
        assert_eq!(s.vertices.len(), 9);
        for p in ["0 0 0", "0 -1/3 1/3", "1/6 -1/3 1/6"] {
            assert!(s.new_vertices.contains(&Vec3::parse(p)));
        }
    }

    #[test]
    fn subdivisions() {
        let g4 = subdivide(&Domain::gamma(4).unwrap()).unwrap();
        assert_eq!(g4.bad_ridges.len(), 2);
        assert!(g4.new_vertices.contains(&Vec3::parse("1/4 0 1/4")));
        assert!(g4.new_vertices.contains(&Vec3::parse("1/4 1/2 1/4")));
        let g6 = subdivide(&Domain::gamma(6).unwrap()).unwrap();
        assert!(g6.new_vertices.contains(&Vec3::parse("1/3 -1/6 1/3")));
        assert!(g6.new_vertices.contains(&Vec3::parse("1/2 -1/2 0")));
        let v6 = Domain::gamma(6).unwrap().vertices();
        for p in ["0 0 0", "5/6 -1/6 -1/6", "1/4 1/4 1/4", "5/12 -7/12 5/12", "1/3 -2/3 1/3", "2/3 -1/3 -1/3"] {
            assert!(v6.contains(&Vec3::parse(p)), "{p}");
        }
        let g1 = subdivide(&Domain::gamma(1).unwrap()).unwrap();
        assert!(g1.new_vertices.is_empty());
    }
}
