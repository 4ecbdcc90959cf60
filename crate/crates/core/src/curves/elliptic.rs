//! Group law on `y² = x³ − 1` over `Q(i)`, the affine chart of `y²z = x³ − z³`.

use std::fmt;

use super::gaussian::GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EllipticPoint {
    Infinity,
    Affine { x: GaussianRational, y: GaussianRational },
}

impl fmt::Display for EllipticPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EllipticPoint::Infinity => write!(f, "O"),
            EllipticPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
#[error("({x}, {y}) does not satisfy y^2 = x^3 - 1")]
pub struct NotOnCurve {
    pub x: String,
    pub y: String,
}

pub fn on_curve(x: &GaussianRational, y: &GaussianRational) -> bool {
    let lhs = y.square();
    let rhs = &(&x.square() * x) - &GaussianRational::one();
    lhs == rhs
}

impl EllipticPoint {
    pub fn affine(x: GaussianRational, y: GaussianRational) -> Result<Self, NotOnCurve> {
        if !on_curve(&x, &y) {
            return Err(NotOnCurve { x: x.to_string(), y: y.to_string() });
        }
        Ok(EllipticPoint::Affine { x, y })
    }

    /// The origin `Q0 = (0:1:0)`.
    pub fn q0() -> Self {
        EllipticPoint::Infinity
    }

    /// `Q1 = (0:i:1)`.
    pub fn q1() -> Self {
        EllipticPoint::Affine { x: GaussianRational::zero(), y: GaussianRational::i() }
    }

    /// `Q2 = (0:−i:1)`.
    pub fn q2() -> Self {
        EllipticPoint::Affine { x: GaussianRational::zero(), y: GaussianRational::int(0, -1) }
    }

    pub fn is_on_curve(&self) -> bool {
        match self {
            EllipticPoint::Infinity => true,
            EllipticPoint::Affine { x, y } => on_curve(x, y),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            EllipticPoint::Infinity => EllipticPoint::Infinity,
            EllipticPoint::Affine { x, y } => EllipticPoint::Affine { x: x.clone(), y: -y },
        }
    }
}

/// Chord-tangent addition with `Infinity` as identity.
pub fn ec_add(p: &EllipticPoint, q: &EllipticPoint) -> EllipticPoint {
    let (x1, y1, x2, y2) = match (p, q) {
        (EllipticPoint::Infinity, _) => return q.clone(),
        (_, EllipticPoint::Infinity) => return p.clone(),
        (EllipticPoint::Affine { x: x1, y: y1 }, EllipticPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
    };
    let slope = if x1 == x2 {
        // vertical chord, or tangent at a 2-torsion point
        if (y1 + y2).is_zero() {
            return EllipticPoint::Infinity;
        }
        &x1.square().scale(3) / &y1.scale(2)
    } else {
        &(y2 - y1) / &(x2 - x1)
    };
    let x3 = &(&slope.square() - x1) - x2;
    let y3 = &(&slope * &(x1 - &x3)) - y1;
    EllipticPoint::Affine { x: x3, y: y3 }
}

/// `n·P` by double-and-add; negative `n` multiplies `−P`.
pub fn ec_mul(n: i64, p: &EllipticPoint) -> EllipticPoint {
    let mut base = if n < 0 { p.neg() } else { p.clone() };
    let mut k = n.unsigned_abs();
    let mut acc = EllipticPoint::Infinity;
    while k > 0 {
        if k & 1 == 1 {
            acc = ec_add(&acc, &base);
        }
        base = ec_add(&base, &base);
        k >>= 1;
    }
    acc
}

/// Points with exact `Q(i)` coordinates used to seed group-law checks.
pub fn catalog_points() -> Vec<EllipticPoint> {
    let g = GaussianRational::int;
    vec![
        EllipticPoint::q1(),
        EllipticPoint::q2(),
        EllipticPoint::Affine { x: g(1, 0), y: g(0, 0) },
        EllipticPoint::Affine { x: g(-2, 0), y: g(0, 3) },
        EllipticPoint::Affine { x: g(-2, 0), y: g(0, -3) },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_points_lie_on_curve() {
        for p in catalog_points() {
            assert!(p.is_on_curve(), "{p}");
        }
        assert!(EllipticPoint::affine(GaussianRational::int(2, 0), GaussianRational::int(3, 0)).is_err());
    }

    #[test]
    fn identity_and_inverse() {
        let p = EllipticPoint::q1();
        assert_eq!(ec_add(&p, &EllipticPoint::Infinity), p);
        assert_eq!(ec_add(&EllipticPoint::q1(), &EllipticPoint::q2()), EllipticPoint::Infinity);
    }

    #[test]
    fn doubling_q1_by_hand() {
        // λ = 3x²/(2y) = 0 at x = 0, so x₃ = −2x = 0 and y₃ = −y.
        assert_eq!(ec_add(&EllipticPoint::q1(), &EllipticPoint::q1()), EllipticPoint::q2());
    }

    #[test]
    fn three_torsion() {
        assert_eq!(ec_mul(3, &EllipticPoint::q1()), EllipticPoint::Infinity);
        assert_eq!(ec_mul(3, &EllipticPoint::q2()), EllipticPoint::Infinity);
        let p = catalog_points()[3].clone();
        assert_eq!(ec_mul(1, &p), p);
        assert_eq!(ec_mul(0, &p), EllipticPoint::Infinity);
    }

    #[test]
    fn two_torsion_doubling() {
        let t = catalog_points()[2].clone();
        assert_eq!(ec_add(&t, &t), EllipticPoint::Infinity);
    }
}
