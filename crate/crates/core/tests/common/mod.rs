//! Test oracles shared by the integration suites.
//!
//! Polynomials are expanded from their product forms in exact rational
//! arithmetic, starting from the binary64 inputs converted exactly.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use triaxial_geodesy::{CartesianPoint, TriaxialEllipsoid};

pub type Q = BigRational;

pub fn q(v: f64) -> Q {
    Q::from_float(v).expect("finite input")
}

pub fn qi(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

/// Coefficients in ascending powers.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly(pub Vec<Q>);

impl Poly {
    pub fn constant(c: Q) -> Self {
        Poly(vec![c])
    }

    /// `t + c`
    pub fn linear(c: Q) -> Self {
        Poly(vec![c, Q::one()])
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![Q::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        Poly(out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![Q::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }

    pub fn scale(&self, s: &Q) -> Poly {
        Poly(self.0.iter().map(|c| c * s).collect())
    }

    /// `p(t + shift)`
    pub fn shift(&self, shift: &Q) -> Poly {
        let arg = Poly::linear(shift.clone());
        let mut rev = self.0.iter().rev();
        let mut out = Poly::constant(rev.next().expect("non-empty").clone());
        for c in rev {
            out = out.mul(&arg).add(&Poly::constant(c.clone()));
        }
        out
    }

    /// `x^n p(s/x)` for `n = deg p`, in ascending powers of `x`.
    pub fn reversed_scaled(&self, s: &Q) -> Poly {
        let n = self.0.len() - 1;
        let mut out = vec![Q::zero(); n + 1];
        let mut pow = Q::one();
        for (j, c) in self.0.iter().enumerate() {
            out[n - j] = c * &pow;
            pow *= s;
        }
        Poly(out)
    }

    pub fn eval(&self, t: &Q) -> Q {
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc * t + c)
    }

    /// Descending-power `f64` coefficients, matching `PolyCoeffs::coeffs`.
    pub fn descending_f64(&self) -> Vec<f64> {
        self.0.iter().rev().map(to_f64).collect()
    }
}

pub fn to_f64(v: &Q) -> f64 {
    v.to_f64().expect("representable")
}

fn square(p: &Poly) -> Poly {
    p.mul(p)
}

/// `−(Σ (a_i c_i)² Π_{j≠i} (t + a_j²)² − Π (t + a_j²)²)` over the given axes.
fn normal_numerator(axes2: &[Q], coords: &[Q]) -> Poly {
    let factors: Vec<Poly> = axes2.iter().map(|a2| square(&Poly::linear(a2.clone()))).collect();
    let all = factors.iter().fold(Poly::constant(Q::one()), |acc, f| acc.mul(f));
    let mut sum = Poly::constant(Q::zero());
    for i in 0..axes2.len() {
        let weight = &axes2[i] * &coords[i] * &coords[i];
        let others = factors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Poly::constant(Q::one()), |acc, (_, f)| acc.mul(f));
        sum = sum.add(&others.scale(&weight));
    }
    all.add(&sum.scale(&-Q::one()))
}

pub struct Exact {
    pub ax2: Q,
    pub ay2: Q,
    pub az2: Q,
    pub x: Q,
    pub y: Q,
    pub z: Q,
}

impl Exact {
    pub fn new(e: &TriaxialEllipsoid, p: CartesianPoint) -> Self {
        let (ax, ay, az) = (q(e.ax()), q(e.ay()), q(e.az()));
        Exact { ax2: &ax * &ax, ay2: &ay * &ay, az2: &az * &az, x: q(p.x), y: q(p.y), z: q(p.z) }
    }

    pub fn a(&self) -> Poly {
        normal_numerator(
            &[self.ax2.clone(), self.ay2.clone(), self.az2.clone()],
            &[self.x.clone(), self.y.clone(), self.z.clone()],
        )
    }

    pub fn abar(&self) -> Poly {
        self.a().shift(&-self.az2.clone())
    }

    pub fn delta(&self) -> Poly {
        normal_numerator(&[self.ax2.clone(), self.ay2.clone()], &[self.x.clone(), self.y.clone()])
    }

    pub fn delta_bar(&self) -> Poly {
        self.delta().shift(&-self.ay2.clone())
    }

    /// `−z⁶ Ā(a_z² Z/z) / (a_z² Z²)`; requires `Z ≠ 0`.
    pub fn b(&self) -> Poly {
        let s = &self.az2 * &self.z;
        let denom = &self.az2 * &self.z * &self.z;
        self.abar().reversed_scaled(&s).scale(&(-Q::one() / denom))
    }

    /// `−y⁴ Δ̄(a_y² Y/y) / (a_y² Y²)`; requires `Y ≠ 0`.
    pub fn g1(&self) -> Poly {
        let s = &self.ay2 * &self.y;
        let denom = &self.ay2 * &self.y * &self.y;
        self.delta_bar().reversed_scaled(&s).scale(&(-Q::one() / denom))
    }
}

pub fn exact_alpha(ax: f64, az: f64, p: CartesianPoint) -> Poly {
    let (ax, az) = (q(ax), q(az));
    let rho2 = q(p.x) * q(p.x) + q(p.y) * q(p.y);
    let z = q(p.z);
    let (ax2, az2) = (&ax * &ax, &az * &az);
    let fx = square(&Poly::linear(ax2.clone()));
    let fz = square(&Poly::linear(az2.clone()));
    let sum = fz.scale(&(&ax2 * rho2)).add(&fx.scale(&(&az2 * &z * &z)));
    fx.mul(&fz).add(&sum.scale(&-Q::one()))
}

/// Largest per-coefficient relative deviation of `computed` (descending
/// powers) from the exact polynomial.
pub fn max_relative_deviation(computed: &[f64], exact: &Poly) -> f64 {
    let exact_desc: Vec<&Q> = exact.0.iter().rev().collect();
    assert_eq!(computed.len(), exact_desc.len(), "degree mismatch");
    computed
        .iter()
        .zip(exact_desc)
        .map(|(&c, x)| {
            if x.is_zero() {
                if c == 0.0 {
                    0.0
                } else {
                    f64::INFINITY
                }
            } else {
                to_f64(&((q(c) - x) / x).abs())
            }
        })
        .fold(0.0, f64::max)
}

/// Sign changes of `f` sampled at `n + 1` equally spaced points of
/// `[lo, hi]`; exact zeros are skipped.
pub fn scan_sign_changes(f: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> usize {
    let mut changes = 0;
    let mut last: Option<bool> = None;
    for i in 0..=n {
        let t = lo + (hi - lo) * (i as f64 / n as f64);
        let v = f(t);
        if v == 0.0 || v.is_nan() {
            continue;
        }
        let neg = v < 0.0;
        if let Some(prev) = last {
            if prev != neg {
                changes += 1;
            }
        }
        last = Some(neg);
    }
    changes
}

/// Root of `f` on `[lo, hi]` by plain bisection to the last representable
/// midpoint; `f(lo)` and `f(hi)` must differ in sign.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let neg_lo = f(lo) < 0.0;
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
        }
        let v = f(mid);
        if v == 0.0 {
            return mid;
        }
        if (v < 0.0) == neg_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}
