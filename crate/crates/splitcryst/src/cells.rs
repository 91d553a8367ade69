//! Cell stabilizers for the equivariant cell structures coming from the
//! fundamental polyhedra, and their refinement to finite-index subgroups.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::Zero;

use crate::catalog::{find, gamma, CrystGroup};
use crate::domain::{subdivide, Domain};
use crate::error::Error;
use crate::exact::{qr, Affine, Mat3, Vec3};
use crate::fingroup::FinGroupType;
use crate::kgroup::QuinnComplex;
use crate::point_group::{standard_point_group, PointGroup, STANDARD_NAMES, VARIANT_NAMES};

/// `{h in H | v - h v in L}` and the isometries `x -> h x + (v - h v)` fixing `v`.
#[derive(Clone, Debug)]
pub struct Stabilizer {
    pub group: PointGroup,
    pub lifts: Vec<Affine>,
}

pub fn point_stabilizer(g: &CrystGroup, v: &Vec3) -> Stabilizer {
    let mut elems = Vec::new();
    let mut lifts = Vec::new();
    for h in g.point_group.elements() {
        let d = v - &(h * v);
        if g.lattice.contains(&d) {
            elems.push(h.clone());
            lifts.push(Affine { t: d, m: h.clone() });
        }
    }
    Stabilizer { group: PointGroup::from_closed(elems), lifts }
}

/// An element of `g` carrying `p` to `q`, if any.
pub fn same_orbit(g: &CrystGroup, p: &Vec3, q: &Vec3) -> Option<Affine> {
    g.point_group.elements().iter().find_map(|h| {
        let d = q - &(h * p);
        g.lattice.contains(&d).then(|| Affine { t: d, m: h.clone() })
    })
}

fn is_signed_permutation(m: &Mat3) -> bool {
    (0..3).all(|i| {
        let r = m.row(i);
        r.0.iter().filter(|x| !x.is_zero()).count() == 1 && r.norm2() == qr(1, 1)
    }) && m.is_integral()
}

/// `true` when `2v` is outside the lattice, which forces a negligible
/// stabilizer for point groups inside `S4+ x (-1)`; `false` is inconclusive.
pub fn negligibility_shortcut(g: &CrystGroup, v: &Vec3) -> Result<bool, Error> {
    if !g.point_group.elements().iter().all(is_signed_permutation) {
        return Err(Error::PreconditionViolated(format!("{} is not inside S4+x(-1)", g.label)));
    }
    Ok(!g.lattice.contains(&v.scale(&qr(2, 1))))
}

/// Name of a standard or variant point group equal to `h`, as a set of matrices.
pub fn identify(h: &PointGroup) -> Option<&'static str> {
    STANDARD_NAMES
        .iter()
        .chain(VARIANT_NAMES.iter())
        .copied()
        .filter(|n| standard_point_group(n).map(|p| p.order() == h.order()).unwrap_or(false))
        .find(|n| standard_point_group(n).map(|p| p == *h).unwrap_or(false))
}

#[derive(Clone, Debug)]
pub struct Cell {
    pub dim: u8,
    /// The vertex itself, or an edge's midpoint, or a generic interior point.
    pub point: Vec3,
    /// Endpoints of an edge.
    pub ends: Option<[Vec3; 2]>,
    pub stabilizer: PointGroup,
    pub iso: FinGroupType,
}

impl Cell {
    pub fn is_negligible(&self) -> bool {
        self.iso.is_negligible()
    }

    pub fn stabilizer_name(&self) -> String {
        identify(&self.stabilizer).map(String::from).unwrap_or_else(|| self.iso.to_string())
    }
}

/// Orbit representatives of cells, with stabilizers.
#[derive(Clone, Debug)]
pub struct CellComplex {
    pub label: String,
    pub cells: Vec<Cell>,
}

impl CellComplex {
    pub fn of_dim(&self, d: u8) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(move |c| c.dim == d)
    }

    pub fn non_negligible(&self) -> CellComplex {
        CellComplex {
            label: self.label.clone(),
            cells: self.cells.iter().filter(|c| !c.is_negligible()).cloned().collect(),
        }
    }
}

fn make_cell(
    g: &CrystGroup,
    dim: u8,
    point: Vec3,
    ends: Option<[Vec3; 2]>,
    generic: Option<&Vec3>,
) -> Result<Cell, Error> {
    let st = point_stabilizer(g, generic.unwrap_or(&point));
    if let Some(p) = generic {
        let at_mid = point_stabilizer(g, &point);
        if at_mid.group != st.group {
            return Err(Error::Procedure(format!("{}: cell at {point} is not fixed pointwise", g.label)));
        }
        if let Some([a, b]) = &ends {
            if !st.lifts.iter().all(|l| l.apply(a) == *a && l.apply(b) == *b) {
                return Err(Error::Procedure(format!("{}: edge through {p} moves its endpoints", g.label)));
            }
        }
    }
    let iso = st.group.iso_type()?;
    Ok(Cell { dim, point, ends, stabilizer: st.group, iso })
}

fn push_if_new(g: &CrystGroup, reps: &mut Vec<Cell>, cell: Cell) {
    let dup = reps.iter().any(|c| c.dim == cell.dim && same_orbit(g, &c.point, &cell.point).is_some());
    if !dup {
        reps.push(cell);
    }
}

/// All cell orbits of the maximal group on lattice `d.index`.
pub fn cells_of_gamma(g: &CrystGroup, d: &Domain) -> Result<CellComplex, Error> {
    if g.lattice_index != d.index || !g.is_maximal() {
        return Err(Error::PreconditionViolated(format!("{} does not match domain {}", g.label, d.index)));
    }
    let sub = subdivide(d)?;
    let mut cells = Vec::new();
    for v in &sub.vertices {
        let c = make_cell(g, 0, v.clone(), None, None)?;
        push_if_new(g, &mut cells, c);
    }
    for (a, b) in &sub.edges {
        let mid = (a + b).scale(&qr(1, 2));
        let generic = &a.scale(&qr(5, 7)) + &b.scale(&qr(2, 7));
        let c = make_cell(g, 1, mid, Some([a.clone(), b.clone()]), Some(&generic))?;
        push_if_new(g, &mut cells, c);
    }
    let mut seen = BTreeSet::new();
    for (i, p) in &sub.faces {
        let partner = d.pairings[*i].partner;
        if seen.contains(&partner) {
            continue;
        }
        seen.insert(*i);
        cells.push(make_cell(g, 2, p.clone(), None, None)?);
    }
    cells.push(make_cell(g, 3, sub.interior.clone(), None, None)?);
    for c in &cells {
        if c.dim >= 2 && !c.is_negligible() {
            return Err(Error::Procedure(format!("{}: non-negligible {}-cell", g.label, c.dim)));
        }
    }
    Ok(CellComplex { label: g.label.clone(), cells })
}

/// Pushes the non-negligible cells of `g` to the finite-index subgroup `sub`.
pub fn refine_stabilizers(g: &CrystGroup, sub: &CrystGroup, cells: &CellComplex) -> Result<CellComplex, Error> {
    if sub.lattice != g.lattice {
        return Err(Error::NotASubgroup(format!("{} has a different lattice from {}", sub.label, g.label)));
    }
    let t = g.point_group.right_transversal(&sub.point_group)?;
    let mut out: Vec<Cell> = Vec::new();
    for c in cells.cells.iter().filter(|c| !c.is_negligible()) {
        for h in &t {
            let point = h * &c.point;
            let ends = c.ends.as_ref().map(|[a, b]| [h * a, h * b]);
            if out.iter().any(|o| o.dim == c.dim && same_orbit(sub, &o.point, &point).is_some()) {
                continue;
            }
            let st = point_stabilizer(sub, &point).group;
            let iso = st.iso_type()?;
            out.push(Cell { dim: c.dim, point, ends, stabilizer: st, iso });
        }
    }
    out.retain(|c| !c.is_negligible());
    Ok(CellComplex { label: sub.label.clone(), cells: out })
}

/// Non-negligible cells of any catalog group, by refinement from its maximal group.
pub fn cell_complex(cat: &[CrystGroup], label: &str) -> Result<CellComplex, Error> {
    let g = find(cat, label)?;
    let top = gamma(cat, g.lattice_index);
    let d = Domain::gamma(g.lattice_index)?;
    let all = cells_of_gamma(top, &d)?;
    if g.is_maximal() {
        return Ok(all.non_negligible());
    }
    refine_stabilizers(top, g, &all)
}

/// The graph of non-negligible vertex and edge orbits, as input for the
/// `K_-1` boundary map.
pub fn quinn_complex(g: &CrystGroup, cx: &CellComplex) -> Result<QuinnComplex, Error> {
    let verts: Vec<&Cell> = cx.of_dim(0).filter(|c| !c.is_negligible()).collect();
    let mut edge_types = Vec::new();
    let mut edge_ends = Vec::new();
    for e in cx.of_dim(1).filter(|c| !c.is_negligible()) {
        let [a, b] = e.ends.as_ref().ok_or_else(|| Error::Procedure("edge without endpoints".into()))?;
        let locate = |p: &Vec3| verts.iter().position(|v| same_orbit(g, &v.point, p).is_some());
        let (ta, tb) = (locate(a), locate(b));
        if ta.is_none() || tb.is_none() {
            return Err(Error::Procedure(format!("{}: edge {} ends at a negligible vertex", g.label, e.point)));
        }
        edge_types.push(e.iso);
        edge_ends.push((ta, tb));
    }
    Ok(QuinnComplex { vertex_types: verts.iter().map(|v| v.iso).collect(), edge_types, edge_ends })
}

pub fn describe(c: &Cell) -> String {
    let star = if c.dim == 1 { "*" } else { "" };
    format!("{}{star} {}", c.point, c.stabilizer_name())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::kgroup::{assemble_hfin, KExpr};

    fn named(n: &str) -> PointGroup {
        standard_point_group(n).unwrap()
    }

    #[test]
    fn point_stabilizer_examples() {
        let cat = catalog().unwrap();
        let g1 = gamma(&cat, 1);
        assert_eq!(point_stabilizer(g1, &Vec3::parse("1/2 1/2 1/2")).group, named("S4+x(-1)"));
        assert_eq!(point_stabilizer(g1, &Vec3::parse("1/7 2/11 3/13")).group.order(), 1);
        // On the x axis, so the yz signed permutations survive.
        let axis = point_stabilizer(g1, &Vec3::parse("1/7 0 0")).group;
        assert_eq!((axis.order(), axis.iso_type().unwrap()), (8, FinGroupType::D4));
        let g3 = gamma(&cat, 3);
        let s = point_stabilizer(g3, &Vec3::parse("1/4 1/4 0")).group;
        assert_eq!((s.order(), s.iso_type().unwrap()), (8, FinGroupType::D2xZ2));
    }

    #[test]
    fn shortcut_examples() {
        let cat = catalog().unwrap();
        assert!(negligibility_shortcut(gamma(&cat, 1), &Vec3::parse("1/4 1/4 1/4")).unwrap());
        assert!(!negligibility_shortcut(gamma(&cat, 1), &Vec3::parse("1/2 0 0")).unwrap());
        assert!(negligibility_shortcut(gamma(&cat, 2), &Vec3::parse("3/8 3/8 0")).unwrap());
        assert!(negligibility_shortcut(gamma(&cat, 5), &Vec3::zero()).is_err());
    }

    #[test]
    fn gamma1_vertices() {
        let cat = catalog().unwrap();
        let cx = cell_complex(&cat, "Gamma_1").unwrap();
        let names: Vec<String> = cx.cells.iter().map(describe).collect();
        assert_eq!(names.len(), 4, "{names:?}");
        assert_eq!(cx.of_dim(0).filter(|c| c.iso == FinGroupType::S4xZ2).count(), 2);
        assert_eq!(cx.of_dim(0).filter(|c| c.iso == FinGroupType::D4xZ2).count(), 2);
    }

    #[test]
    fn refinement_examples() {
        let cat = catalog().unwrap();
        let a4 = cell_complex(&cat, "A4+x(-1)_1").unwrap();
        assert_eq!(a4.cells.len(), 4);
        assert_eq!(a4.cells.iter().filter(|c| c.stabilizer == named("A4+x(-1)")).count(), 2);
        assert_eq!(a4.cells.iter().filter(|c| c.stabilizer == named("D2+x(-1)")).count(), 2);
        let d2 = cell_complex(&cat, "D2+x(-1)_1").unwrap();
        assert_eq!(d2.cells.len(), 8);
        assert!(d2.cells.iter().all(|c| c.stabilizer == named("D2+x(-1)")));
        let top = gamma(&cat, 1);
        let all = cells_of_gamma(top, &Domain::gamma(1).unwrap()).unwrap();
        let same = refine_stabilizers(top, top, &all).unwrap();
        assert_eq!(same.cells.len(), all.non_negligible().cells.len());
    }

    #[test]
    fn gamma5_complex() {
        let cat = catalog().unwrap();
        let g = gamma(&cat, 5);
        let cx = cell_complex(&cat, "Gamma_5").unwrap();
        let edges: Vec<&Cell> = cx.of_dim(1).collect();
        assert_eq!(edges.len(), 1);
        assert_eq!(edges[0].stabilizer, named("D''_6"));
        let q = quinn_complex(g, &cx).unwrap();
        let (k1, k0, wh) = assemble_hfin(&q, &g.label).unwrap();
        assert_eq!((k1, k0, wh), (KExpr::free(7), KExpr::z2(6), KExpr::ZERO));
    }

    #[test]
    fn every_maximal_complex_builds() {
        let cat = catalog().unwrap();
        for i in 1..=7 {
            let g = gamma(&cat, i);
            let cx = cells_of_gamma(g, &Domain::gamma(i).unwrap()).unwrap_or_else(|e| panic!("Gamma_{i}: {e}"));
            assert!(cx.cells.iter().any(|c| c.dim == 3 && c.stabilizer.order() == 1));
        }
    }
}
