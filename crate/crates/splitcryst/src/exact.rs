//! Exact rational scalars, 3-vectors, 3x3 matrices, affine isometries and lattices.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Exact rational scalar, always in lowest terms with a positive denominator.
pub type Q = BigRational;

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p/q" or "p".
pub fn qs(s: &str) -> Q {
    Q::from_str(s.trim()).unwrap_or_else(|_| panic!("bad rational literal {s:?}"))
}

pub fn q_to_string(x: &Q) -> String {
    alloc::format!("{x}")
}

pub fn is_int(x: &Q) -> bool {
    x.is_integer()
}

/// Greatest common divisor of two rationals, `gcd(a/b, c/d) = gcd(ad, cb)/(bd)`.
pub fn q_gcd(a: &Q, b: &Q) -> Q {
    let den = a.denom() * b.denom();
    let x = a.numer() * b.denom();
    let y = b.numer() * a.denom();
    Q::new(x.gcd(&y), den)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec3(pub [Q; 3]);

impl Vec3 {
    pub fn new(x: Q, y: Q, z: Q) -> Self {
        Vec3([x, y, z])
    }

    pub fn zero() -> Self {
        Vec3([Q::zero(), Q::zero(), Q::zero()])
    }

    pub fn ints(v: [i64; 3]) -> Self {
        Vec3([qi(v[0]), qi(v[1]), qi(v[2])])
    }

    /// Whitespace separated rationals, e.g. `"1/2 0 -1/6"`.
    pub fn parse(s: &str) -> Self {
        let parts: Vec<Q> = s.split_whitespace().map(qs).collect();
        assert_eq!(parts.len(), 3, "vector literal {s:?}");
        let [x, y, z]: [Q; 3] = parts.try_into().unwrap();
        Vec3([x, y, z])
    }

    pub fn dot(&self, o: &Vec3) -> Q {
        &self.0[0] * &o.0[0] + &self.0[1] * &o.0[1] + &self.0[2] * &o.0[2]
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        let a = &self.0;
        let b = &o.0;
        Vec3([&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]])
    }

    pub fn norm2(&self) -> Q {
        self.dot(self)
    }

    pub fn scale(&self, k: &Q) -> Vec3 {
        Vec3([&self.0[0] * k, &self.0[1] * k, &self.0[2] * k])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(is_int)
    }

    /// Rescales a nonzero vector to the primitive integer vector on the same ray.
    pub fn primitive_integer(&self) -> [BigInt; 3] {
        assert!(!self.is_zero(), "zero vector has no primitive form");
        let mut l = BigInt::one();
        for c in &self.0 {
            l = l.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.0.iter().map(|c| (c * Q::from_integer(l.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        [&ints[0] / &g, &ints[1] / &g, &ints[2] / &g]
    }

    pub fn to_strings(&self) -> [String; 3] {
        [q_to_string(&self.0[0]), q_to_string(&self.0[1]), q_to_string(&self.0[2])]
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.0[0], self.0[1], self.0[2])
    }
}

impl Add for &Vec3 {
    type Output = Vec3;
    fn add(self, o: &Vec3) -> Vec3 {
        Vec3([&self.0[0] + &o.0[0], &self.0[1] + &o.0[1], &self.0[2] + &o.0[2]])
    }
}

impl Sub for &Vec3 {
    type Output = Vec3;
    fn sub(self, o: &Vec3) -> Vec3 {
        Vec3([&self.0[0] - &o.0[0], &self.0[1] - &o.0[1], &self.0[2] - &o.0[2]])
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3([-&self.0[0], -&self.0[1], -&self.0[2]])
    }
}

/// Row-major 3x3 rational matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat3(pub [[Q; 3]; 3]);

impl Mat3 {
    pub fn identity() -> Self {
        Self::ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn ints(m: [[i64; 3]; 3]) -> Self {
        Mat3(m.map(|r| r.map(qi)))
    }

    pub fn diag(a: i64, b: i64, c: i64) -> Self {
        Self::ints([[a, 0, 0], [0, b, 0], [0, 0, c]])
    }

    /// Rows separated by `;`, entries by whitespace, e.g. `"0 1 0; 0 0 1; 1 0 0"`.
    pub fn parse(s: &str) -> Self {
        let rows: Vec<Vec3> = s.split(';').map(Vec3::parse).collect();
        assert_eq!(rows.len(), 3, "matrix literal {s:?}");
        Self::from_rows(&rows[0], &rows[1], &rows[2])
    }

    pub fn from_rows(a: &Vec3, b: &Vec3, c: &Vec3) -> Self {
        Mat3([a.0.clone(), b.0.clone(), c.0.clone()])
    }

    pub fn from_cols(a: &Vec3, b: &Vec3, c: &Vec3) -> Self {
        Self::from_rows(a, b, c).transpose()
    }

    pub fn row(&self, i: usize) -> Vec3 {
        Vec3(self.0[i].clone())
    }

    pub fn col(&self, j: usize) -> Vec3 {
        Vec3([self.0[0][j].clone(), self.0[1][j].clone(), self.0[2][j].clone()])
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Mat3(core::array::from_fn(|i| core::array::from_fn(|j| m[j][i].clone())))
    }

    pub fn det(&self) -> Q {
        self.row(0).dot(&self.row(1).cross(&self.row(2)))
    }

    pub fn inverse(&self) -> Option<Mat3> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let r = [self.row(0), self.row(1), self.row(2)];
        // Columns of the inverse are cross products of rows, divided by det.
        let c0 = r[1].cross(&r[2]).scale(&d.recip());
        let c1 = r[2].cross(&r[0]).scale(&d.recip());
        let c2 = r[0].cross(&r[1]).scale(&d.recip());
        Some(Mat3::from_cols(&c0, &c1, &c2))
    }

    pub fn is_orthogonal(&self) -> bool {
        &self.transpose() * self == Mat3::identity()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().flatten().all(is_int)
    }

    pub fn trace(&self) -> Q {
        &self.0[0][0] + &self.0[1][1] + &self.0[2][2]
    }

    pub fn to_i64(&self) -> Option<[[i64; 3]; 3]> {
        let mut out = [[0i64; 3]; 3];
        for (row, src) in out.iter_mut().zip(&self.0) {
            for (o, e) in row.iter_mut().zip(src) {
                if !e.is_integer() {
                    return None;
                }
                *o = e.to_integer().to_i64()?;
            }
        }
        Some(out)
    }

    pub fn to_strings(&self) -> [[String; 3]; 3] {
        self.0.clone().map(|r| r.map(|e| q_to_string(&e)))
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat3::identity()
    }

    pub fn is_minus_identity(&self) -> bool {
        *self == -&Mat3::identity()
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}; {}]", self.row(0), self.row(1), self.row(2))
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, o: &Mat3) -> Mat3 {
        let a = &self.0;
        let b = &o.0;
        Mat3(core::array::from_fn(|i| {
            core::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j] + &a[i][2] * &b[2][j])
        }))
    }
}

impl Mul<&Vec3> for &Mat3 {
    type Output = Vec3;
    fn mul(self, v: &Vec3) -> Vec3 {
        Vec3(core::array::from_fn(|i| self.row(i).dot(v)))
    }
}

impl Neg for &Mat3 {
    type Output = Mat3;
    fn neg(self) -> Mat3 {
        Mat3(self.0.clone().map(|r| r.map(|e| -e)))
    }
}

impl Sub for &Mat3 {
    type Output = Mat3;
    fn sub(self, o: &Mat3) -> Mat3 {
        Mat3(core::array::from_fn(|i| core::array::from_fn(|j| &self.0[i][j] - &o.0[i][j])))
    }
}

/// Affine map `x -> t + m x` with orthogonal `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Affine {
    pub t: Vec3,
    pub m: Mat3,
}

impl Affine {
    pub fn new(t: Vec3, m: Mat3) -> Result<Self, Error> {
        if !m.is_orthogonal() {
            return Err(Error::NotOrthogonal(alloc::format!("{m}")));
        }
        Ok(Affine { t, m })
    }

    pub fn linear(m: Mat3) -> Result<Self, Error> {
        Self::new(Vec3::zero(), m)
    }

    pub fn translation(t: Vec3) -> Self {
        Affine { t, m: Mat3::identity() }
    }

    pub fn identity() -> Self {
        Self::translation(Vec3::zero())
    }

    pub fn apply(&self, p: &Vec3) -> Vec3 {
        &self.t + &(&self.m * p)
    }

    /// `self * o`, i.e. apply `o` first.
    pub fn compose(&self, o: &Affine) -> Affine {
        Affine { t: &self.t + &(&self.m * &o.t), m: &self.m * &o.m }
    }

    pub fn inverse(&self) -> Affine {
        let mi = self.m.transpose();
        let t = -&(&mi * &self.t);
        Affine { t, m: mi }
    }

    /// True when this is the orthogonal reflection in the plane `n.x = c`.
    pub fn is_reflection_in(&self, n: &Vec3, c: &Q) -> bool {
        let nn = n.norm2();
        let two = qi(2);
        let refl = Mat3(core::array::from_fn(|i| {
            core::array::from_fn(|j| {
                let id = if i == j { Q::one() } else { Q::zero() };
                id - &two * &n.0[i] * &n.0[j] / &nn
            })
        }));
        let t = n.scale(&(&two * c / &nn));
        self.m == refl && self.t == t
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}", self.t, self.m)
    }
}

pub fn apply_isometry(g: &Affine, p: &Vec3) -> Vec3 {
    g.apply(p)
}

/// A rank three lattice given by a basis, stored as listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub basis: [Vec3; 3],
    pub name: Option<String>,
    cols: Mat3,
    inv: Mat3,
}

impl Lattice {
    pub fn new(basis: [Vec3; 3], name: Option<String>) -> Result<Self, Error> {
        let cols = Mat3::from_cols(&basis[0], &basis[1], &basis[2]);
        let inv = cols.inverse().ok_or(Error::DegenerateBasis)?;
        Ok(Lattice { basis, name, cols, inv })
    }

    pub fn standard() -> Self {
        Self::new([Vec3::ints([1, 0, 0]), Vec3::ints([0, 1, 0]), Vec3::ints([0, 0, 1])], None).unwrap()
    }

    /// Basis vectors as the columns of a matrix.
    pub fn basis_matrix(&self) -> &Mat3 {
        &self.cols
    }

    pub fn inverse_basis(&self) -> &Mat3 {
        &self.inv
    }

    pub fn coords(&self, v: &Vec3) -> Vec3 {
        &self.inv * v
    }

    pub fn contains(&self, v: &Vec3) -> bool {
        self.coords(v).is_integral()
    }

    pub fn det(&self) -> Q {
        self.cols.det()
    }

    /// Rewrites a linear map in basis coordinates: `B^-1 m B`.
    pub fn in_basis(&self, m: &Mat3) -> Mat3 {
        &(&self.inv * m) * &self.cols
    }

    /// Scales `v` to the shortest lattice vector on its ray.
    pub fn primitive_along(&self, v: &Vec3) -> Vec3 {
        let c = self.coords(v).primitive_integer();
        let c = Vec3(c.map(Q::from_integer));
        &self.cols * &c
    }

    /// Finds `s` with `x - s v` in the lattice, `v` a lattice vector. The answer
    /// is unique modulo the period of `v` in the lattice.
    pub fn solve_mod_line(&self, x: &Vec3, v: &Vec3) -> Option<Q> {
        let c = self.coords(x);
        let d = self.coords(v);
        if !d.is_integral() || d.is_zero() {
            return None;
        }
        let i = (0..3).find(|&i| !d.0[i].is_zero())?;
        let di = d.0[i].to_integer();
        let steps = di.abs().to_i64()?;
        for k in 0..steps {
            let s = (&c.0[i] - qi(k)) / &d.0[i];
            if (&c - &d.scale(&s)).is_integral() {
                return Some(&s - Q::from_integer(s.floor().to_integer()));
            }
        }
        None
    }

    pub fn contains_mod_line(&self, x: &Vec3, v: &Vec3) -> bool {
        self.solve_mod_line(x, v).is_some()
    }
}

pub fn lattice_contains(l: &Lattice, v: &Vec3) -> bool {
    l.contains(v)
}

pub fn sublattice_index(big: &Lattice, small: &Lattice) -> Result<BigInt, Error> {
    let cs: Vec<Vec3> = small.basis.iter().map(|b| big.coords(b)).collect();
    if !cs.iter().all(Vec3::is_integral) {
        return Err(Error::NotASublattice);
    }
    Ok(Mat3::from_cols(&cs[0], &cs[1], &cs[2]).det().abs().to_integer())
}

/// True iff the generators span a subgroup equal to `L ∩ span(generators)`.
pub fn is_full_subgroup(l: &Lattice, gens: &[Vec3]) -> Result<bool, Error> {
    let mut rows = Vec::new();
    for g in gens {
        let c = l.coords(g);
        if !c.is_integral() {
            return Err(Error::GeneratorNotInLattice(alloc::format!("{g}")));
        }
        rows.push(c.0.iter().map(|e| e.to_integer()).collect::<Vec<_>>());
    }
    // The generated subgroup is full iff the integer coordinate matrix has all
    // nonzero invariant factors equal to one.
    let m = crate::kgroup::IntMatrix::from_rows(rows);
    let snf = crate::kgroup::smith_normal_form(&m);
    Ok(snf.factors.iter().all(One::is_one))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l4() -> Lattice {
        Lattice::new([Vec3::parse("1/2 0 1/2"), Vec3::ints([0, 1, 0]), Vec3::ints([0, 0, 1])], None).unwrap()
    }

    #[test]
    fn rationals_are_canonical() {
        assert_eq!(qr(2, 4), qr(-1, -2));
        assert_eq!(qs("6/-4"), qr(-3, 2));
        assert_eq!(q_to_string(&qs("4/2")), "2");
        assert_eq!(q_gcd(&qr(1, 2), &qr(1, 3)), qr(1, 6));
        assert_eq!(q_gcd(&qi(0), &qr(2, 3)), qr(2, 3));
    }

    #[test]
    fn membership_examples() {
        let fcc =
            Lattice::new([Vec3::parse("1/2 1/2 0"), Vec3::parse("1/2 0 1/2"), Vec3::parse("0 1/2 1/2")], None).unwrap();
        assert!(lattice_contains(&Lattice::standard(), &Vec3::ints([1, 0, 0])));
        assert!(lattice_contains(&fcc, &Vec3::parse("1/2 1/2 0")));
        assert!(!lattice_contains(&Lattice::standard(), &Vec3::parse("1/2 0 0")));
    }

    #[test]
    fn index_examples() {
        let bcc =
            Lattice::new([Vec3::parse("1/2 1/2 1/2"), Vec3::ints([0, 1, 0]), Vec3::ints([0, 0, 1])], None).unwrap();
        assert_eq!(sublattice_index(&bcc, &Lattice::standard()).unwrap(), BigInt::from(2));
        assert_eq!(sublattice_index(&Lattice::standard(), &Lattice::standard()).unwrap(), BigInt::from(1));
        let v = [Vec3::ints([1, 1, 1]), Vec3::ints([1, -1, 0]), Vec3::ints([0, -1, 1])];
        let l5 = Lattice::new(v.clone(), None).unwrap();
        let l7 = Lattice::new([v[0].clone(), (&v[1] + &v[2]).scale(&qr(1, 3)), v[2].clone()], None).unwrap();
        assert_eq!(sublattice_index(&l7, &l5).unwrap(), BigInt::from(3));
        assert!(matches!(sublattice_index(&l5, &l7), Err(Error::NotASublattice)));
    }

    #[test]
    fn full_subgroups() {
        assert!(is_full_subgroup(&Lattice::standard(), &[Vec3::ints([1, 0, 0])]).unwrap());
        assert!(!is_full_subgroup(&Lattice::standard(), &[Vec3::ints([2, 0, 0])]).unwrap());
        // x is primitive in <(x+z)/2, y, z>: x/2 is not a lattice point.
        assert!(is_full_subgroup(&l4(), &[Vec3::ints([1, 0, 0])]).unwrap());
        assert!(!is_full_subgroup(&l4(), &[Vec3::ints([1, 0, 1])]).unwrap());
        let l5 = Lattice::new([Vec3::ints([1, 1, 1]), Vec3::ints([1, -1, 0]), Vec3::ints([0, -1, 1])], None).unwrap();
        assert!(is_full_subgroup(&l5, &[Vec3::ints([1, -1, 0]), Vec3::ints([0, -1, 1])]).unwrap());
        assert!(matches!(is_full_subgroup(&l5, &[Vec3::ints([1, 0, 0])]), Err(Error::GeneratorNotInLattice(_))));
    }

    #[test]
    fn isometry_examples() {
        let p = Vec3::parse("1/4 1/4 0");
        assert_eq!(apply_isometry(&Affine::identity(), &p), p);
        let anti = Affine::linear(-&Mat3::identity()).unwrap();
        assert_eq!(apply_isometry(&anti, &Vec3::parse("1/2 1/2 1/2")), Vec3::parse("-1/2 -1/2 -1/2"));
        let e = Mat3::parse("1/3 -2/3 -2/3; -2/3 1/3 -2/3; -2/3 -2/3 1/3");
        let g = Affine::new(Vec3::ints([1, 1, 1]), e).unwrap();
        assert_eq!(apply_isometry(&g, &Vec3::zero()), Vec3::ints([1, 1, 1]));
        assert!(g.is_reflection_in(&Vec3::ints([1, 1, 1]), &qr(3, 2)));
        assert!(Affine::new(Vec3::zero(), Mat3::diag(2, 1, 1)).is_err());
    }

    #[test]
    fn inverse_and_compose() {
        let m = Mat3::parse("0 -1 0; 1 0 0; 0 0 1");
        let g = Affine::new(Vec3::parse("1/2 0 1/3"), m).unwrap();
        let h = g.compose(&g.inverse());
        assert_eq!(h, Affine::identity());
        let b = Mat3::parse("1 2 0; 0 1 0; 3 0 1");
        assert_eq!(&b * &b.inverse().unwrap(), Mat3::identity());
    }

    #[test]
    fn line_membership() {
        let l = Lattice::standard();
        let s = l.solve_mod_line(&Vec3::parse("1/2 1/3 0"), &Vec3::ints([0, 1, 0]));
        assert!(s.is_none());
        let s = l.solve_mod_line(&Vec3::parse("0 1/3 0"), &Vec3::ints([0, 1, 0])).unwrap();
        assert!(l.contains(&(&Vec3::parse("0 1/3 0") - &Vec3::ints([0, 1, 0]).scale(&s))));
        assert_eq!(l.primitive_along(&Vec3::parse("2 2 0")), Vec3::ints([1, 1, 0]));
    }
}
