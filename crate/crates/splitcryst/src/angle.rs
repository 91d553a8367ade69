//! Exact angles of the form `a*pi + sum c_r * arccos(sqrt(r))`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use num_traits::{One, Signed, Zero};

use crate::exact::{qi, qr, Vec3, Q};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Angle {
    /// Coefficient of pi.
    pub pi: Q,
    /// `r -> c` meaning `c * arccos(sqrt(r))`, `0 < r < 1` not a special value.
    pub arccos: BTreeMap<Q, i64>,
}

/// An exact cosine `sign * sqrt(square)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cosine {
    pub sign: i8,
    pub square: Q,
}

fn special(r: &Q) -> Option<Q> {
    let table = [(qi(0), qr(1, 2)), (qr(1, 4), qr(1, 3)), (qr(1, 2), qr(1, 4)), (qr(3, 4), qr(1, 6)), (qi(1), qi(0))];
    table.iter().find(|(x, _)| x == r).map(|(_, a)| a.clone())
}

impl Angle {
    pub fn pi_times(a: Q) -> Self {
        Angle { pi: a, arccos: BTreeMap::new() }
    }

    pub fn arccos(c: &Cosine) -> Self {
        if let Some(a) = special(&c.square) {
            return if c.sign < 0 { Self::pi_times(Q::one() - a) } else { Self::pi_times(a) };
        }
        let mut m = BTreeMap::new();
        if c.sign < 0 {
            // arccos(-x) = pi - arccos(x)
            m.insert(c.square.clone(), -1);
            Angle { pi: Q::one(), arccos: m }
        } else {
            m.insert(c.square.clone(), 1);
            Angle { pi: Q::zero(), arccos: m }
        }
    }

    pub fn neg(&self) -> Self {
        Angle { pi: -&self.pi, arccos: self.arccos.iter().map(|(r, c)| (r.clone(), -c)).collect() }
    }

    /// A rational multiple of pi, when every arccos term cancels.
    pub fn as_pi_multiple(&self) -> Option<&Q> {
        self.arccos.is_empty().then_some(&self.pi)
    }
}

impl Add for &Angle {
    type Output = Angle;
    fn add(self, o: &Angle) -> Angle {
        let mut m = self.arccos.clone();
        for (r, c) in &o.arccos {
            let e = m.entry(r.clone()).or_insert(0);
            *e += c;
            if *e == 0 {
                m.remove(r);
            }
        }
        Angle { pi: &self.pi + &o.pi, arccos: m }
    }
}

fn sqrt_text(r: &Q) -> String {
    if r.numer().is_one() {
        format!("1/sqrt({})", r.denom())
    } else {
        format!("sqrt({r})")
    }
}

fn pi_text(a: &Q) -> String {
    let (n, d) = (a.numer(), a.denom());
    let num = if n.is_one() {
        String::from("pi")
    } else if (-n).is_one() {
        String::from("-pi")
    } else {
        format!("{n}*pi")
    };
    if d.is_one() {
        num
    } else {
        format!("{num}/{d}")
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arccos.len() == 1 {
            let (r, c) = self.arccos.iter().next().unwrap();
            if self.pi.is_zero() && *c == 1 {
                return write!(f, "arccos({})", sqrt_text(r));
            }
            if self.pi.is_one() && *c == -1 {
                return write!(f, "arccos(-{})", sqrt_text(r));
            }
        }
        let mut parts: Vec<String> = Vec::new();
        if !self.pi.is_zero() || self.arccos.is_empty() {
            parts.push(if self.pi.is_zero() { String::from("0") } else { pi_text(&self.pi) });
        }
        for (r, c) in &self.arccos {
            let body = format!("arccos({})", sqrt_text(r));
            let term = if c.abs() == 1 { body } else { format!("{}*{body}", c.abs()) };
            if parts.is_empty() {
                parts.push(if *c < 0 { format!("-{term}") } else { term });
            } else {
                parts.push(format!("{} {term}", if *c < 0 { "-" } else { "+" }));
            }
        }
        f.write_str(&parts.join(" "))
    }
}

/// Cosine of the angle between two nonzero vectors.
pub fn cosine(n1: &Vec3, n2: &Vec3) -> Cosine {
    let d = n1.dot(n2);
    let sign = if d.is_positive() {
        1
    } else if d.is_negative() {
        -1
    } else {
        0
    };
    Cosine { sign, square: &d * &d / (n1.norm2() * n2.norm2()) }
}

/// Cosine of `arccos(N1.N2/|N1||N2|)`, which the dihedral angle supplements.
pub fn dihedral_cosine(n1: &Vec3, n2: &Vec3) -> Cosine {
    cosine(n1, n2)
}

/// Interior dihedral angle between sides with outward normals `n1`, `n2`.
pub fn dihedral_angle(n1: &Vec3, n2: &Vec3) -> Angle {
    &Angle::pi_times(Q::one()) + &Angle::arccos(&cosine(n1, n2)).neg()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn dihedral_examples() {
        let a = dihedral_angle(&Vec3::ints([0, -1, 1]), &Vec3::ints([0, 0, -1]));
        assert_eq!(a, Angle::pi_times(qr(1, 4)));
        assert_eq!(a.to_string(), "pi/4");
        let r = dihedral_angle(&Vec3::ints([1, 0, 0]), &Vec3::ints([0, 1, 0]));
        assert_eq!(r.to_string(), "pi/2");
        let g = dihedral_angle(&Vec3::ints([0, 0, -1]), &Vec3::ints([1, 1, 1]));
        assert_eq!(g.to_string(), "arccos(1/sqrt(3))");
        let h = dihedral_angle(&Vec3::ints([1, 0, 0]), &Vec3::ints([1, 1, 1]));
        assert_eq!(h.to_string(), "arccos(-1/sqrt(3))");
        assert_eq!((&g + &h).as_pi_multiple(), Some(&qi(1)));
    }

    #[test]
    fn rendering() {
        assert_eq!(Angle::pi_times(qr(2, 3)).to_string(), "2*pi/3");
        assert_eq!(Angle::pi_times(qi(0)).to_string(), "0");
        let c = Cosine { sign: 1, square: qr(2, 3) };
        assert_eq!(Angle::arccos(&c).to_string(), "arccos(sqrt(2/3))");
    }
}
