//! Coefficients of the univariate polynomials whose unique positive root
//! locates the footpoint, plus the sign-pattern analysis that guarantees
//! that root is unique.
//!
//! Coefficients are stored degree-descending. Every builder evaluates the
//! factored closed forms directly, sharing `a_i²`, `P`, `Q`, `R` and the
//! squared coordinates; the only differences of large squares are those
//! hidden inside `P`, `Q` and `R`.
//!
//! | kind            | variable                         | degree | used by            |
//! |-----------------|----------------------------------|--------|--------------------|
//! | `A`             | `t`, normal-line parameter        | 6      | outside points     |
//! | `Abar`          | `k = t + a_z²`                    | 6      | inside, `Z ≠ 0`    |
//! | `Delta`         | `t`, restricted to `Z = 0`        | 4      | test oracle only   |
//! | `DeltaBar`      | `k = t + a_y²`                    | 4      | inside, `Z = 0`    |
//! | `B`             | `z`, footpoint `Z_E`              | 6      | second algorithm   |
//! | `G1`            | `y`, footpoint `Y_E` when `Z = 0` | 4      | second algorithm   |
//! | `AlphaBiaxial`  | `t` on a biaxial ellipsoid        | 4      | `a_x = a_y` models |

use std::fmt;

use crate::ellipsoid::{CartesianPoint, TriaxialEllipsoid, SURFACE_TOLERANCE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolyKind {
    A,
    Abar,
    Delta,
    DeltaBar,
    B,
    G1,
    AlphaBiaxial,
}

impl PolyKind {
    pub fn degree(self) -> usize {
        match self {
            PolyKind::A | PolyKind::Abar | PolyKind::B => 6,
            PolyKind::Delta | PolyKind::DeltaBar | PolyKind::G1 | PolyKind::AlphaBiaxial => 4,
        }
    }
}

/// Dense real coefficients, highest degree first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolyCoeffs {
    kind: PolyKind,
    coeffs: [f64; 7],
}

impl PolyCoeffs {
    fn sextic(kind: PolyKind, coeffs: [f64; 7]) -> Self {
        Self { kind, coeffs }
    }

    fn quartic(kind: PolyKind, c: [f64; 5]) -> Self {
        Self { kind, coeffs: [c[0], c[1], c[2], c[3], c[4], 0.0, 0.0] }
    }

    pub fn kind(&self) -> PolyKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.kind.degree()
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs[..=self.kind.degree()]
    }

    /// Coefficient of `x^power`.
    pub fn coeff(&self, power: usize) -> f64 {
        self.coeffs()[self.degree() - power]
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs().iter().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Value and first derivative in one Horner pass.
    pub fn eval_with_derivative(&self, x: f64) -> (f64, f64) {
        let c = self.coeffs();
        let mut value = c[0];
        let mut deriv = 0.0;
        for &ci in &c[1..] {
            deriv = deriv * x + value;
            value = value * x + ci;
        }
        (value, deriv)
    }
}

impl fmt::Display for PolyCoeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.kind, self.coeffs())
    }
}

struct Squares {
    x2: f64,
    y2: f64,
    z2: f64,
}

impl Squares {
    fn of(p: CartesianPoint) -> Self {
        Self { x2: p.x * p.x, y2: p.y * p.y, z2: p.z * p.z }
    }
}

/// Numerator of `Σ (a_i c_i)²/(t + a_i²)² − 1` (sign chosen so it is monic).
pub fn build_a(e: &TriaxialEllipsoid, p: CartesianPoint) -> PolyCoeffs {
    let (ax2, ay2, az2) = (e.ax2(), e.ay2(), e.az2());
    let Squares { x2, y2, z2 } = Squares::of(p);
    let s1 = ax2 + ay2 + az2;
    let s2 = ax2 * ay2 + ax2 * az2 + ay2 * az2;
    let s3 = ax2 * ay2 * az2;
    let (ax4, ay4, az4) = (ax2 * ax2, ay2 * ay2, az2 * az2);

    let a5 = 2.0 * s1;
    let a4 = -ax2 * x2 - ay2 * y2 - az2 * z2 + s1 * s1 + 2.0 * s2;
    let a3 = -2.0 * (ax2 * (ay2 + az2) * x2 + ay2 * (ax2 + az2) * y2 + az2 * (ax2 + ay2) * z2 - s1 * s2 - s3);
    let a2 = -ax2 * (ay4 + 4.0 * ay2 * az2 + az4) * x2
        - ay2 * (ax4 + 4.0 * ax2 * az2 + az4) * y2
        - az2 * (ax4 + 4.0 * ax2 * ay2 + ay4) * z2
        + s2 * s2
        + 2.0 * s3 * s1;
    let a1 = -2.0 * s3 * ((ay2 + az2) * x2 + (ax2 + az2) * y2 + (ax2 + ay2) * z2 - s2);
    let a0 = -s3 * (ax2 * ay2 * z2 + ax2 * az2 * y2 + ay2 * az2 * x2 - s3);
    PolyCoeffs::sextic(PolyKind::A, [1.0, a5, a4, a3, a2, a1, a0])
}

/// `A(k − a_z²)`, written in `P` and `Q`.
pub fn build_abar(e: &TriaxialEllipsoid, p: CartesianPoint) -> PolyCoeffs {
    let (ax2, ay2, az2) = (e.ax2(), e.ay2(), e.az2());
    let (pp, qq) = (e.p(), e.q());
    let Squares { x2, y2, z2 } = Squares::of(p);
    let sum = pp + qq;
    let mixed = pp * pp + qq * qq + 4.0 * pp * qq;

    let a5 = 2.0 * sum;
    let a4 = -ax2 * x2 - ay2 * y2 - az2 * z2 + mixed;
    let a3 = 2.0 * (-ax2 * qq * x2 - ay2 * pp * y2 - az2 * sum * z2 + pp * qq * sum);
    let a2 = -ax2 * qq * qq * x2 - ay2 * pp * pp * y2 - az2 * mixed * z2 + pp * pp * qq * qq;
    let a1 = -2.0 * az2 * pp * qq * sum * z2;
    let a0 = -az2 * pp * pp * qq * qq * z2;
    PolyCoeffs::sextic(PolyKind::Abar, [1.0, a5, a4, a3, a2, a1, a0])
}

/// Quartic in `t` for the `Z = 0` plane. Only the shifted form is solved;
/// this one is kept to cross-check it.
pub fn build_delta(e: &TriaxialEllipsoid, p: CartesianPoint) -> PolyCoeffs {
    let (ax2, ay2) = (e.ax2(), e.ay2());
    let Squares { x2, y2, .. } = Squares::of(p);
    let d3 = 2.0 * (ax2 + ay2);
    let d2 = ax2 * ax2 + 4.0 * ax2 * ay2 + ay2 * ay2 - ax2 * x2 - ay2 * y2;
    let d1 = 2.0 * ax2 * ay2 * (ax2 + ay2 - x2 - y2);
    let d0 = ax2 * ay2 * (ax2 * ay2 - ax2 * y2 - ay2 * x2);
    PolyCoeffs::quartic(PolyKind::Delta, [1.0, d3, d2, d1, d0])
}

/// `Δ(k − a_y²)`.
pub fn build_delta_bar(e: &TriaxialEllipsoid, p: CartesianPoint) -> PolyCoeffs {
    let (ax2, ay2, r) = (e.ax2(), e.ay2(), e.r());
    let Squares { x2, y2, .. } = Squares::of(p);
    PolyCoeffs::quartic(
        PolyKind::DeltaBar,
        [1.0, 2.0 * r, r * r - ax2 * x2 - ay2 * y2, -2.0 * ay2 * y2 * r, -ay2 * y2 * r * r],
    )
}

/// Sextic in the footpoint's `z` coordinate from the lexicographic Gröbner
/// basis of the footpoint system.
pub fn build_b(e: &TriaxialEllipsoid, p: CartesianPoint) -> PolyCoeffs {
    let (ax2, ay2, az2) = (e.ax2(), e.ay2(), e.az2());
    let (pp, qq) = (e.p(), e.q());
    let Squares { x2, y2, z2 } = Squares::of(p);
    let z = p.z;
    let sum = pp + qq;
    let mixed = pp * pp + qq * qq + 4.0 * pp * qq;
    let pq2 = pp * pp * qq * qq;
    let az4 = az2 * az2;
    let az6 = az4 * az2;
    let az8 = az4 * az4;

    let b6 = pq2;
    let b5 = 2.0 * az2 * z * pp * qq * sum;
    let b4 = az2 * (ax2 * qq * qq * x2 + ay2 * pp * pp * y2 + az2 * mixed * z2 - pq2);
    let b3 = 2.0 * az4 * z * (ax2 * qq * x2 + ay2 * pp * y2 + az2 * sum * z2 - pp * qq * sum);
    let b2 = az6 * z2 * (ax2 * x2 + ay2 * y2 + az2 * z2 - mixed);
    let b1 = -2.0 * az8 * z2 * z * sum;
    let b0 = -az8 * az2 * z2 * z2;
    PolyCoeffs::sextic(PolyKind::B, [b6, b5, b4, b3, b2, b1, b0])
}

/// Quartic in the footpoint's `y` coordinate for points in the `Z = 0` plane.
pub fn build_g1(e: &TriaxialEllipsoid, p: CartesianPoint) -> PolyCoeffs {
    let (ax2, ay2, r) = (e.ax2(), e.ay2(), e.r());
    let Squares { x2, y2, .. } = Squares::of(p);
    let y = p.y;
    let ay4 = ay2 * ay2;
    PolyCoeffs::quartic(
        PolyKind::G1,
        [r * r, 2.0 * ay2 * r * y, -ay2 * (r * r - ax2 * x2 - ay2 * y2), -2.0 * ay4 * r * y, -ay4 * ay2 * y2],
    )
}

/// Quartic replacing `A` on a biaxial ellipsoid (`a_x = a_y`).
pub fn build_alpha_biaxial(ax: f64, az: f64, p: CartesianPoint) -> PolyCoeffs {
    let (ax2, az2) = (ax * ax, az * az);
    let Squares { x2, y2, z2 } = Squares::of(p);
    let s = ax2 + az2;
    let m = ax2 * az2;
    PolyCoeffs::quartic(
        PolyKind::AlphaBiaxial,
        [
            1.0,
            2.0 * s,
            -ax2 * (x2 + y2) - az2 * z2 + s * s + 2.0 * m,
            -2.0 * m * (x2 + y2 + z2 - ax2 - az2),
            -m * (az2 * x2 + az2 * y2 + ax2 * z2 - m),
        ],
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Zero,
    Minus,
}

impl Sign {
    /// Only an exact `0.0` is `Zero`.
    pub fn of(v: f64) -> Sign {
        if v > 0.0 {
            Sign::Plus
        } else if v < 0.0 {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Zero => "0",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignPattern {
    pub signs: Vec<Sign>,
    /// Strict sign changes with zeros skipped (Descartes' convention).
    pub changes: usize,
}

impl SignPattern {
    pub fn from_signs(signs: Vec<Sign>) -> Self {
        let mut changes = 0;
        let mut last = None;
        for &s in signs.iter().filter(|&&s| s != Sign::Zero) {
            if last.is_some_and(|l| l != s) {
                changes += 1;
            }
            last = Some(s);
        }
        Self { signs, changes }
    }

    pub fn from_values(values: &[f64]) -> Self {
        Self::from_signs(values.iter().map(|&v| Sign::of(v)).collect())
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, s) in self.signs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "] ({} changes)", self.changes)
    }
}

/// Signs of all coefficients, leading one included.
pub fn sign_pattern(c: &PolyCoeffs) -> SignPattern {
    SignPattern::from_values(c.coeffs())
}

/// Centred axis-aligned ellipsoid `cx X² + cy Y² + cz Z² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticForm {
    pub cx: f64,
    pub cy: f64,
    pub cz: f64,
}

impl QuadraticForm {
    /// Negative inside, positive outside.
    pub fn eval(&self, p: CartesianPoint) -> f64 {
        self.cx * p.x * p.x + self.cy * p.y * p.y + self.cz * p.z * p.z - 1.0
    }

    pub fn semiaxes(&self) -> [f64; 3] {
        [self.cx.recip().sqrt(), self.cy.recip().sqrt(), self.cz.recip().sqrt()]
    }
}

/// The ellipsoids `e₁ ⊂ e₂ ⊂ e₃ ⊂ e₄` on which `A₁, A₂, A₃, A₄` vanish.
pub fn nested_ellipsoids(e: &TriaxialEllipsoid) -> [QuadraticForm; 4] {
    let (ax2, ay2, az2) = (e.ax2(), e.ay2(), e.az2());
    let (ax4, ay4, az4) = (ax2 * ax2, ay2 * ay2, az2 * az2);
    let s1 = ax2 + ay2 + az2;
    let s2 = ax2 * ay2 + ax2 * az2 + ay2 * az2;
    let s3 = ax2 * ay2 * az2;

    let d2 = s2 * s2 + 2.0 * s3 * s1;
    let d3 = s1 * s2 + s3;
    let d4 = s1 * s1 + 2.0 * s2;
    [
        QuadraticForm { cx: (ay2 + az2) / s2, cy: (ax2 + az2) / s2, cz: (ax2 + ay2) / s2 },
        QuadraticForm {
            cx: ax2 * (ay4 + 4.0 * ay2 * az2 + az4) / d2,
            cy: ay2 * (ax4 + 4.0 * ax2 * az2 + az4) / d2,
            cz: az2 * (ax4 + 4.0 * ax2 * ay2 + ay4) / d2,
        },
        QuadraticForm { cx: ax2 * (ay2 + az2) / d3, cy: ay2 * (ax2 + az2) / d3, cz: az2 * (ax2 + ay2) / d3 },
        QuadraticForm { cx: ax2 / d4, cy: ay2 / d4, cz: az2 / d4 },
    ]
}

/// The ellipsoids `ē₂ ⊂ ē₃ ⊂ ē₄` on which `Ā₂, Ā₃, Ā₄` vanish.
pub fn shifted_nested_ellipsoids(e: &TriaxialEllipsoid) -> [QuadraticForm; 3] {
    let (ax2, ay2, az2) = (e.ax2(), e.ay2(), e.az2());
    let (pp, qq) = (e.p(), e.q());
    let mixed = pp * pp + qq * qq + 4.0 * pp * qq;
    [
        QuadraticForm { cx: ax2 / (pp * pp), cy: ay2 / (qq * qq), cz: az2 * mixed / (pp * pp * qq * qq) },
        QuadraticForm { cx: ax2 / (pp * (pp + qq)), cy: ay2 / (qq * (pp + qq)), cz: az2 / (pp * qq) },
        QuadraticForm { cx: ax2 / mixed, cy: ay2 / mixed, cz: az2 / mixed },
    ]
}

/// Position relative to the reference ellipsoid and `e₁ … e₄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReferenceShell {
    InsideReference,
    OnReference,
    BetweenReferenceE1,
    OnE1,
    BetweenE1E2,
    OnE2,
    BetweenE2E3,
    OnE3,
    BetweenE3E4,
    OnE4,
    OutsideE4,
}

impl ReferenceShell {
    pub const ALL: [ReferenceShell; 11] = [
        ReferenceShell::InsideReference,
        ReferenceShell::OnReference,
        ReferenceShell::BetweenReferenceE1,
        ReferenceShell::OnE1,
        ReferenceShell::BetweenE1E2,
        ReferenceShell::OnE2,
        ReferenceShell::BetweenE2E3,
        ReferenceShell::OnE3,
        ReferenceShell::BetweenE3E4,
        ReferenceShell::OnE4,
        ReferenceShell::OutsideE4,
    ];

    /// Signs of `[1, A₅, A₄, A₃, A₂, A₁, A₀]` for a point in this shell.
    pub fn expected_a_signs(self) -> [Sign; 7] {
        use Sign::{Minus as M, Plus as P, Zero as Z};
        match self {
            ReferenceShell::InsideReference => [P, P, P, P, P, P, P],
            ReferenceShell::OnReference => [P, P, P, P, P, P, Z],
            ReferenceShell::BetweenReferenceE1 => [P, P, P, P, P, P, M],
            ReferenceShell::OnE1 => [P, P, P, P, P, Z, M],
            ReferenceShell::BetweenE1E2 => [P, P, P, P, P, M, M],
            ReferenceShell::OnE2 => [P, P, P, P, Z, M, M],
            ReferenceShell::BetweenE2E3 => [P, P, P, P, M, M, M],
            ReferenceShell::OnE3 => [P, P, P, Z, M, M, M],
            ReferenceShell::BetweenE3E4 => [P, P, P, M, M, M, M],
            ReferenceShell::OnE4 => [P, P, Z, M, M, M, M],
            ReferenceShell::OutsideE4 => [P, P, M, M, M, M, M],
        }
    }

    pub fn is_outside_reference(self) -> bool {
        !matches!(self, ReferenceShell::InsideReference | ReferenceShell::OnReference)
    }
}

/// Position relative to `ē₂ … ē₄`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShiftedShell {
    InsideEbar2,
    OnEbar2,
    BetweenEbar2Ebar3,
    OnEbar3,
    BetweenEbar3Ebar4,
    OnEbar4,
    OutsideEbar4,
}

impl ShiftedShell {
    pub const ALL: [ShiftedShell; 7] = [
        ShiftedShell::InsideEbar2,
        ShiftedShell::OnEbar2,
        ShiftedShell::BetweenEbar2Ebar3,
        ShiftedShell::OnEbar3,
        ShiftedShell::BetweenEbar3Ebar4,
        ShiftedShell::OnEbar4,
        ShiftedShell::OutsideEbar4,
    ];

    /// Signs of `[1, Ā₅, Ā₄, Ā₃, Ā₂, Ā₁, Ā₀]` for a point with `Z > 0`.
    pub fn expected_abar_signs(self) -> [Sign; 7] {
        use Sign::{Minus as M, Plus as P, Zero as Z};
        match self {
            ShiftedShell::InsideEbar2 => [P, P, P, P, P, M, M],
            ShiftedShell::OnEbar2 => [P, P, P, P, Z, M, M],
            ShiftedShell::BetweenEbar2Ebar3 => [P, P, P, P, M, M, M],
            ShiftedShell::OnEbar3 => [P, P, P, Z, M, M, M],
            ShiftedShell::BetweenEbar3Ebar4 => [P, P, P, M, M, M, M],
            ShiftedShell::OnEbar4 => [P, P, Z, M, M, M, M],
            ShiftedShell::OutsideEbar4 => [P, P, M, M, M, M, M],
        }
    }

    /// Signs of `[B₆, …, B₀]` for a point with `Z > 0`. `B₄, B₃, B₂` carry
    /// the opposite signs of `Ā₂, Ā₃, Ā₄`.
    pub fn expected_b_signs(self) -> [Sign; 7] {
        let abar = self.expected_abar_signs();
        let flip = |s: Sign| match s {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        };
        [Sign::Plus, Sign::Plus, flip(abar[4]), flip(abar[3]), flip(abar[2]), Sign::Minus, Sign::Minus]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RegionClass {
    pub reference: ReferenceShell,
    pub shifted: ShiftedShell,
}

fn side(v: f64) -> Sign {
    if v.abs() <= SURFACE_TOLERANCE {
        Sign::Zero
    } else {
        Sign::of(v)
    }
}

/// Locate `p` in both shell families by evaluating each shell's quadratic
/// form. Values within [`SURFACE_TOLERANCE`] of zero count as "on".
pub fn classify_region(e: &TriaxialEllipsoid, p: CartesianPoint) -> RegionClass {
    let mut values = vec![e.residual(p)];
    values.extend(nested_ellipsoids(e).iter().map(|q| q.eval(p)));
    let reference = walk_shells(&values, &ReferenceShell::ALL);
    let values: Vec<f64> = shifted_nested_ellipsoids(e).iter().map(|q| q.eval(p)).collect();
    let shifted = walk_shells(&values, &ShiftedShell::ALL);
    RegionClass { reference, shifted }
}

/// `shells` alternates open shell / boundary, innermost first, and has
/// `2 * values.len() + 1` entries.
fn walk_shells<T: Copy>(values: &[f64], shells: &[T]) -> T {
    for (i, &v) in values.iter().enumerate() {
        match side(v) {
            Sign::Minus => return shells[2 * i],
            Sign::Zero => return shells[2 * i + 1],
            Sign::Plus => {}
        }
    }
    shells[2 * values.len()]
}
