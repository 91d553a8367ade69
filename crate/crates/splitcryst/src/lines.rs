//! Lines with non-negligible strict stabilizers, their full stabilizers as
//! virtually cyclic groups, and the cokernels those contribute.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::catalog::{find, gamma, CrystGroup};
use crate::cells::identify;
use crate::error::Error;
use crate::exact::{q_gcd, qi, Affine, Mat3, Vec3, Q};
use crate::fingroup::FinGroupType;
use crate::kgroup::KExpr;
use crate::point_group::PointGroup;

/// The line `point + alpha * dir`, with `dir` primitive in the lattice and
/// `point` perpendicular to it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ParamLine {
    pub point: Vec3,
    pub dir: Vec3,
}

impl ParamLine {
    /// Normalizes `point` to the foot of the perpendicular from the origin and
    /// `dir` to the primitive lattice vector along it.
    pub fn new(g: &CrystGroup, point: Vec3, dir: Vec3) -> Result<Self, Error> {
        if dir.is_zero() {
            return Err(Error::PreconditionViolated("zero direction".into()));
        }
        let dir = g.lattice.primitive_along(&dir);
        let s = point.dot(&dir) / dir.norm2();
        let point = &point - &dir.scale(&s);
        Ok(ParamLine { point, dir })
    }

    /// Parses the tabular form, e.g. `"alpha+1/2, -2alpha+1/2, alpha+1/2"`.
    pub fn parse(g: &CrystGroup, s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.trim().trim_start_matches('(').trim_end_matches(')').split(',').collect();
        if parts.len() != 3 {
            return Err(Error::UnknownName(s.to_string()));
        }
        let mut p = [Q::zero(), Q::zero(), Q::zero()];
        let mut d = [Q::zero(), Q::zero(), Q::zero()];
        for (i, part) in parts.iter().enumerate() {
            let (a, b) = parse_affine_term(part).ok_or_else(|| Error::UnknownName(s.to_string()))?;
            p[i] = a;
            d[i] = b;
        }
        Self::new(g, Vec3(p), Vec3(d))
    }

    pub fn at(&self, alpha: &Q) -> Vec3 {
        &self.point + &self.dir.scale(alpha)
    }

    /// Integer direction used for display.
    pub fn integer_dir(&self) -> [BigInt; 3] {
        self.dir.primitive_integer()
    }
}

fn parse_affine_term(s: &str) -> Option<(Q, Q)> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut konst = Q::zero();
    let mut coef = Q::zero();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let sign_len = if rest.starts_with('+') || rest.starts_with('-') { 1 } else { 0 };
        let end = rest[sign_len..].find(['+', '-']).map(|i| i + sign_len).unwrap_or(rest.len());
        let tok = &rest[..end];
        rest = &rest[end..];
        let neg = tok.starts_with('-');
        let body = tok.trim_start_matches(['+', '-']);
        let val = |t: &str| -> Option<Q> {
            if t.is_empty() {
                return Some(Q::one());
            }
            let (n, d) = t.split_once('/').unwrap_or((t, "1"));
            Some(Q::new(n.parse::<BigInt>().ok()?, d.parse::<BigInt>().ok()?))
        };
        let (target, v) = if let Some(c) = body.strip_suffix("alpha") {
            (&mut coef, val(c.trim_end_matches('*'))?)
        } else {
            (&mut konst, val(body)?)
        };
        *target += if neg { -v } else { v };
    }
    Some((konst, coef))
}

impl fmt::Display for ParamLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.integer_dir();
        let parts: Vec<String> = (0..3)
            .map(|i| {
                let c = &d[i];
                let a = &self.point.0[i];
                let term = if c.is_zero() {
                    String::new()
                } else if c.is_one() {
                    "alpha".into()
                } else if (-c).is_one() {
                    "-alpha".into()
                } else {
                    format!("{c}alpha")
                };
                match (term.is_empty(), a.is_zero()) {
                    (true, _) => a.to_string(),
                    (false, true) => term,
                    (false, false) if a.is_negative() => format!("{term}{a}"),
                    (false, false) => format!("{term}+{a}"),
                }
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `{h in H | h v = v, p - h p in L}`: the point-group image of the elements
/// fixing the line pointwise.
pub fn strict_stabilizer(g: &CrystGroup, l: &ParamLine) -> PointGroup {
    let elems = g
        .point_group
        .elements()
        .iter()
        .filter(|h| *h * &l.dir == l.dir && g.lattice.contains(&(&l.point - &(*h * &l.point))))
        .cloned()
        .collect();
    PointGroup::from_closed(elems)
}

/// Square-free strict stabilizers contribute nothing.
pub fn is_negligible_line(g: &CrystGroup, l: &ParamLine) -> bool {
    !strict_stabilizer(g, l).order().is_multiple_of(4)
}

/// An element of `g` carrying `a` onto `b` as sets.
pub fn line_equivalence(g: &CrystGroup, a: &ParamLine, b: &ParamLine) -> Option<Affine> {
    for h in g.point_group.elements() {
        let hv = h * &a.dir;
        if hv != b.dir && hv != -&b.dir {
            continue;
        }
        let hp = h * &a.point;
        if let Some(s) = g.lattice.solve_mod_line(&(&hp - &b.point), &b.dir) {
            // hp + t = b.point + s' b.dir with t in L.
            let t = &(&b.point - &hp) + &b.dir.scale(&s);
            return Some(Affine { t, m: h.clone() });
        }
    }
    None
}

/// The parametrized lines listed for the maximal groups.
fn maximal_lines(i: usize) -> &'static [&'static str] {
    match i {
        1 => &["0, 0, alpha", "1/2, 1/2, alpha", "1/2, 0, alpha", "alpha, alpha, 0", "alpha, alpha, 1/2"],
        2 => &["0, 0, alpha", "1/2, 0, alpha", "alpha, alpha, 0"],
        3 => &["0, 0, alpha", "alpha, alpha, 0", "alpha, alpha, 1/2", "1/4, 1/4, alpha"],
        4 => &["0, 0, alpha", "0, 1/2, alpha", "alpha, 0, 0", "alpha, 1/2, 0", "0, alpha, 0", "0, alpha, 1/2"],
        5 => &[
            "alpha, alpha, alpha",
            "alpha+1/2, alpha-1/2, alpha",
            "alpha, -alpha, 0",
            "alpha+1/2, -alpha+1/2, 1/2",
            "alpha, -2alpha, alpha",
            "alpha+1/2, -2alpha+1/2, alpha+1/2",
        ],
        _ => &[],
    }
}

/// One line per orbit of lines with non-negligible strict stabilizer.
pub fn t_double_prime(cat: &[CrystGroup], label: &str) -> Result<Vec<ParamLine>, Error> {
    let g = find(cat, label)?;
    let top = gamma(cat, g.lattice_index);
    let base: Vec<ParamLine> =
        maximal_lines(g.lattice_index).iter().map(|s| ParamLine::parse(top, s)).collect::<Result<_, _>>()?;
    let t = top.point_group.right_transversal(&g.point_group)?;
    let mut out: Vec<ParamLine> = Vec::new();
    for l in &base {
        for h in &t {
            let img = ParamLine::new(g, h * &l.point, h * &l.dir)?;
            if out.iter().any(|o| line_equivalence(g, o, &img).is_some()) {
                continue;
            }
            out.push(img);
        }
    }
    out.retain(|l| !is_negligible_line(g, l));
    if out.len() > 20 {
        return Err(Error::Procedure(format!("{label}: {} lines", out.len())));
    }
    Ok(out)
}

/// Generator of `{v1 . v / v . v | v1 in L}`.
pub fn translation_quantum(g: &CrystGroup, v: &Vec3) -> Q {
    let n = v.norm2();
    g.lattice.basis.iter().fold(Q::zero(), |acc, b| q_gcd(&acc, &(b.dot(v) / &n)))
}

/// The smallest `C > 0` with some element acting on the line as `alpha -> alpha + C`.
pub fn minimal_translation(g: &CrystGroup, l: &ParamLine) -> (Q, Affine) {
    let q = translation_quantum(g, &l.dir);
    let mut fixing: Vec<&Mat3> = g.point_group.elements().iter().filter(|h| *h * &l.dir == l.dir).collect();
    fixing.sort_by_key(|h| !h.is_identity());
    let mut c = q.clone();
    loop {
        for h in &fixing {
            let t = &(&l.point - &(*h * &l.point)) + &l.dir.scale(&c);
            if g.lattice.contains(&t) {
                return (c, Affine { t, m: (*h).clone() });
            }
        }
        assert!(c <= Q::one(), "translation by the lattice direction always acts");
        c += &q;
    }
}

/// An element acting on the line as `alpha -> D - alpha`, with `D`.
pub fn find_reflection(g: &CrystGroup, l: &ParamLine) -> Option<(Affine, Q)> {
    let minus = -&Mat3::identity();
    let mut cands: Vec<&Mat3> = g.point_group.elements().iter().filter(|h| *h * &l.dir == -&l.dir).collect();
    cands.sort_by_key(|h| **h != minus);
    for h in cands {
        let x = &l.point - &(h * &l.point);
        if let Some(s) = g.lattice.solve_mod_line(&x, &l.dir) {
            let d = -s;
            let t = &x + &l.dir.scale(&d);
            return Some((Affine { t, m: h.clone() }, d));
        }
    }
    None
}

/// Abstract shape of a line stabilizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VcStructure {
    SemiDirect { fiber: FinGroupType, twisted: bool },
    Amalgam { left: FinGroupType, amalgamated: FinGroupType, right: FinGroupType },
}

/// The non-negligible maximal infinite virtually cyclic types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VcType {
    C4xZ,
    D2xZ,
    D2sZ,
    D4xZ,
    D6xZ,
    C4xDinf,
    D2xDinf,
    D4xDinf,
    D6xDinf,
    D4AmC4,
    D4AmD2,
    D2Z2AmD4,
}

impl VcType {
    pub const ALL: [VcType; 12] = [
        VcType::C4xZ,
        VcType::D2xZ,
        VcType::D2sZ,
        VcType::D4xZ,
        VcType::D6xZ,
        VcType::C4xDinf,
        VcType::D2xDinf,
        VcType::D4xDinf,
        VcType::D6xDinf,
        VcType::D4AmC4,
        VcType::D4AmD2,
        VcType::D2Z2AmD4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            VcType::C4xZ => "C4xZ",
            VcType::D2xZ => "D2xZ",
            VcType::D2sZ => "D2x|Z",
            VcType::D4xZ => "D4xZ",
            VcType::D6xZ => "D6xZ",
            VcType::C4xDinf => "C4xDinf",
            VcType::D2xDinf => "D2xDinf",
            VcType::D4xDinf => "D4xDinf",
            VcType::D6xDinf => "D6xDinf",
            VcType::D4AmC4 => "D4*_C4 D4",
            VcType::D4AmD2 => "D4*_D2 D4",
            VcType::D2Z2AmD4 => "(D2xZ/2)*_D2 D4",
        }
    }

    pub fn from_name(s: &str) -> Result<VcType, Error> {
        Self::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| Error::UnknownVcType(s.to_string()))
    }

    pub fn classify(s: &VcStructure) -> Result<VcType, Error> {
        use FinGroupType::*;
        let t = match *s {
            VcStructure::SemiDirect { fiber: Z4, twisted: false } => VcType::C4xZ,
            VcStructure::SemiDirect { fiber: D2, twisted: false } => VcType::D2xZ,
            VcStructure::SemiDirect { fiber: D2, twisted: true } => VcType::D2sZ,
            VcStructure::SemiDirect { fiber: D4, twisted: false } => VcType::D4xZ,
            VcStructure::SemiDirect { fiber: D6, twisted: false } => VcType::D6xZ,
            VcStructure::Amalgam { left, amalgamated, right } => {
                let (a, b) = if left <= right { (left, right) } else { (right, left) };
                match (a, amalgamated, b) {
                    (Z4xZ2, Z4, Z4xZ2) => VcType::C4xDinf,
                    (D2xZ2, D2, D2xZ2) => VcType::D2xDinf,
                    (D4xZ2, D4, D4xZ2) => VcType::D4xDinf,
                    (D6xZ2, D6, D6xZ2) => VcType::D6xDinf,
                    (D4, Z4, D4) => VcType::D4AmC4,
                    (D4, D2, D4) => VcType::D4AmD2,
                    (D2xZ2, D2, D4) => VcType::D2Z2AmD4,
                    _ => return Err(Error::UnknownVcType(format!("{s}"))),
                }
            }
            _ => return Err(Error::UnknownVcType(format!("{s}"))),
        };
        Ok(t)
    }
}

impl fmt::Display for VcStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VcStructure::SemiDirect { fiber, twisted } => write!(f, "{fiber}{}Z", if *twisted { "x|" } else { "x" }),
            VcStructure::Amalgam { left, amalgamated, right } => write!(f, "{left} *_{amalgamated} {right}"),
        }
    }
}

impl fmt::Display for VcType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Cokernel of the relative assembly map in degree `n`.
pub fn cokernel(t: VcType, n: i32) -> KExpr {
    use VcType::*;
    let inf2 = KExpr::inf_z2();
    match n {
        0 => match t {
            D4xZ | D4xDinf => inf2 + KExpr::inf_z4(),
            _ => inf2,
        },
        1 => match t {
            D4xZ => KExpr::nk_d4(2),
            D6xZ => KExpr::nk_d6(2),
            D4xDinf => KExpr::nk_d4(1),
            D6xDinf => KExpr::nk_d6(1),
            _ => inf2,
        },
        _ => KExpr::ZERO,
    }
}

/// Everything computed for one line.
#[derive(Clone, Debug)]
pub struct LineData {
    pub line: ParamLine,
    pub strict: PointGroup,
    pub strict_name: String,
    pub translation: Q,
    pub gamma_t: Affine,
    pub reflection: Option<(Affine, Q)>,
    pub structure: VcStructure,
    pub vc: VcType,
}

pub fn vc_structure(g: &CrystGroup, l: &ParamLine) -> Result<LineData, Error> {
    let strict = strict_stabilizer(g, l);
    let fiber = strict.iso_type()?;
    let (c, gt) = minimal_translation(g, l);
    let refl = find_reflection(g, l);
    let structure = match &refl {
        None => VcStructure::SemiDirect { fiber, twisted: !strict.conjugation_is_inner(&gt.m) },
        Some((gr, _)) => {
            let left = strict.join(core::slice::from_ref(&gr.m))?.iso_type()?;
            let right = strict.join(&[&gt.m * &gr.m])?.iso_type()?;
            VcStructure::Amalgam { left, amalgamated: fiber, right }
        }
    };
    let vc = VcType::classify(&structure)?;
    let strict_name = identify(&strict).map(String::from).unwrap_or_else(|| fiber.to_string());
    Ok(LineData { line: l.clone(), strict, strict_name, translation: c, gamma_t: gt, reflection: refl, structure, vc })
}

pub fn line_data(cat: &[CrystGroup], label: &str) -> Result<Vec<LineData>, Error> {
    let g = find(cat, label)?;
    t_double_prime(cat, label)?.iter().map(|l| vc_structure(g, l)).collect()
}

/// Checks `gamma_T r(a) = r(a + C)` and `gamma_R r(a) = r(D - a)` at two parameters.
pub fn procedure_sound(g: &CrystGroup, d: &LineData) -> bool {
    let l = &d.line;
    let q = translation_quantum(g, &l.dir);
    let k = &d.translation / &q;
    let in_range = k.is_integer() && k.is_positive() && d.translation <= Q::one();
    let member = |a: &Affine| g.point_group.contains(&a.m) && g.lattice.contains(&a.t);
    let t_ok = [qi(0), qi(1)].iter().all(|a| d.gamma_t.apply(&l.at(a)) == l.at(&(a + &d.translation)));
    let r_ok = d.reflection.as_ref().is_none_or(|(r, dd)| {
        let sq = r.compose(r);
        member(r) && [qi(0), qi(1)].iter().all(|a| r.apply(&l.at(a)) == l.at(&(dd - a))) && d.strict.contains(&sq.m)
    });
    in_range && member(&d.gamma_t) && t_ok && r_ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;
    use crate::exact::qr;
    use crate::point_group::standard_point_group;

    #[test]
    fn parse_and_display() {
        let cat = catalog().unwrap();
        let g5 = gamma(&cat, 5);
        let l = ParamLine::parse(g5, "alpha+1/2, -2alpha+1/2, alpha+1/2").unwrap();
        assert_eq!(l.to_string(), "(alpha+1/2, -2alpha+1/2, alpha+1/2)");
        let g3 = gamma(&cat, 3);
        let l = ParamLine::parse(g3, "alpha, alpha, 1/2").unwrap();
        assert_eq!(l.dir, Vec3::parse("1/2 1/2 0"));
        assert_eq!(l.to_string(), "(alpha, alpha, 1/2)");
    }

    #[test]
    fn strict_stabilizer_examples() {
        let cat = catalog().unwrap();
        let g1 = gamma(&cat, 1);
        let z = ParamLine::parse(g1, "0, 0, alpha").unwrap();
        assert_eq!(strict_stabilizer(g1, &z), standard_point_group("D''_4").unwrap());
        assert!(!is_negligible_line(g1, &z));
        assert!(is_negligible_line(g1, &ParamLine::parse(g1, "alpha, alpha, alpha").unwrap()));
        let g5 = gamma(&cat, 5);
        let diag = ParamLine::parse(g5, "alpha, alpha, alpha").unwrap();
        assert_eq!(strict_stabilizer(g5, &diag), standard_point_group("D''_6").unwrap());
        let c1 = find(&cat, "C1+_1").unwrap();
        assert_eq!(strict_stabilizer(c1, &z).order(), 1);
    }

    #[test]
    fn line_counts() {
        let cat = catalog().unwrap();
        assert_eq!(t_double_prime(&cat, "Gamma_1").unwrap().len(), 5);
        assert!(t_double_prime(&cat, "Gamma_6").unwrap().is_empty());
        assert_eq!(t_double_prime(&cat, "D4+x(-1)_1").unwrap().len(), 9);
    }

    #[test]
    fn translation_examples() {
        let cat = catalog().unwrap();
        let g1 = gamma(&cat, 1);
        let (c, t) = minimal_translation(g1, &ParamLine::parse(g1, "0, 0, alpha").unwrap());
        assert_eq!((c, t), (qi(1), Affine::translation(Vec3::parse("0 0 1"))));
        let (c, _) = minimal_translation(g1, &ParamLine::parse(g1, "alpha, alpha, 1/2").unwrap());
        assert_eq!(c, qi(1));
        let g2 = gamma(&cat, 2);
        let l = ParamLine::parse(g2, "1/2, 0, alpha").unwrap();
        let (c, t) = minimal_translation(g2, &l);
        assert_eq!(c, qr(1, 2));
        // Either diagonal reflection of the xy-plane works.
        assert!(!t.m.is_identity() && &t.m * &l.dir == l.dir);
        assert_eq!(t.apply(&l.at(&qi(0))), l.at(&qr(1, 2)));
    }

    #[test]
    fn reflection_examples() {
        let cat = catalog().unwrap();
        let g3 = gamma(&cat, 3);
        let (r, d) = find_reflection(g3, &ParamLine::parse(g3, "1/4, 1/4, alpha").unwrap()).unwrap();
        assert!(r.m.is_minus_identity());
        assert_eq!(d, qi(0));
        let d4 = find(&cat, "D''_4_1").unwrap();
        assert!(find_reflection(d4, &ParamLine::parse(d4, "0, 0, alpha").unwrap()).is_none());
    }

    #[test]
    fn structure_examples() {
        let cat = catalog().unwrap();
        let g1 = gamma(&cat, 1);
        let s = vc_structure(g1, &ParamLine::parse(g1, "0, 0, alpha").unwrap()).unwrap();
        assert_eq!(s.vc, VcType::D4xDinf);
        let g2 = gamma(&cat, 2);
        let s = vc_structure(g2, &ParamLine::parse(g2, "1/2, 0, alpha").unwrap()).unwrap();
        assert_eq!(s.vc, VcType::D2Z2AmD4);
        let d2 = find(&cat, "D''_4_2").unwrap();
        let s = vc_structure(d2, &ParamLine::parse(d2, "1/2, 0, alpha").unwrap()).unwrap();
        assert_eq!(s.structure, VcStructure::SemiDirect { fiber: FinGroupType::D2, twisted: true });
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel(VcType::D2xDinf, 0), KExpr::inf_z2());
        assert_eq!(cokernel(VcType::D6xDinf, 1), KExpr::nk_d6(1));
        assert_eq!(cokernel(VcType::D6xZ, 1), KExpr::nk_d6(2));
        assert!(VcType::ALL.iter().all(|t| cokernel(*t, -1).is_zero()));
    }
}
