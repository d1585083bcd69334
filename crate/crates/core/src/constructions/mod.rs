//! Builds the overlap figures behind each descent argument and verifies
//! their area identities.
//!
//! A figure places small regular polygons of side `b` inside a big one
//! of side `a` so that the total small area equals the big area exactly
//! when `a² = k·b²`. Verification clips the placed polygons against
//! each other and checks, at working precision, that
//!
//! * the multiplicity bookkeeping is internally consistent,
//! * `uncovered − excess = C_shape·(a² − k·b²)` (the quantitative form
//!   of "doubly covered balances uncovered"),
//! * the overlap and gap cells have the predicted counts and sizes.

mod pentagon;

pub use pentagon::{pentagon_angle_chase, pentagon_lemma_side, AngleRat};

use std::fmt;
use std::ops::{Mul, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::triangular_number;
use crate::exact::{perfect_square_root, rat, ExactError, Rational};
use crate::geometry::{
    multiplicity_accounting, ConvexPolygon, Coverage, GeometryError, Point, Real,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FigureError {
    #[error("triangular index must be ≥ 2, got {0}")]
    TriangularIndexTooSmall(u32),
    #[error(
        "T_{n} = {t_n} = {root}² is a perfect square; a² = T_{n}·b² has the \
         solution ({root}, 1), so no overlap figure can demonstrate anything"
    )]
    SquareTriangular { n: u32, t_n: u64, root: u64 },
    #[error("pair (a, b) = ({a}, {b}) is out of range for {kind}: need {need}")]
    OutOfRange {
        kind: String,
        a: u64,
        b: u64,
        need: String,
    },
    #[error("pentagon lemma failed: {0}")]
    PentagonLemma(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A homogeneous linear expression `c_a·a + c_b·b` with rational
/// coefficients, used for the exact side lengths of overlap cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub a_coeff: Rational,
    pub b_coeff: Rational,
}

impl LinearForm {
    pub fn new(a_coeff: Rational, b_coeff: Rational) -> Self {
        LinearForm { a_coeff, b_coeff }
    }

    pub fn eval(&self, a: u64, b: u64) -> Rational {
        &self.a_coeff * rat(a as i64, 1) + &self.b_coeff * rat(b as i64, 1)
    }
}

impl Sub for &LinearForm {
    type Output = LinearForm;
    fn sub(self, rhs: &LinearForm) -> LinearForm {
        LinearForm::new(&self.a_coeff - &rhs.a_coeff, &self.b_coeff - &rhs.b_coeff)
    }
}

impl Mul<&Rational> for &LinearForm {
    type Output = LinearForm;
    fn mul(self, rhs: &Rational) -> LinearForm {
        LinearForm::new(&self.a_coeff * rhs, &self.b_coeff * rhs)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})·a + ({})·b", self.a_coeff, self.b_coeff)
    }
}

/// The side lengths of the multiplicity-2/3 cells (`t`) and of the
/// uncovered cells (`s`) as linear forms in `(a, b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideForms {
    pub t: LinearForm,
    pub s: LinearForm,
}

/// The five construction families. `Sqrt3` and `Sqrt6` are the
/// triangular layouts with 2 and 3 rows; `Triangular(n)` generalizes
/// them. `Sqrt2` and `Sqrt5` have their own placement rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureKind {
    Sqrt2,
    Sqrt3,
    Sqrt5,
    Sqrt6,
    Triangular(u32),
}

impl FigureKind {
    /// Validates the triangular index: at least 2, and `T_n` nonsquare.
    pub fn validate(&self) -> Result<(), FigureError> {
        if let FigureKind::Triangular(n) = *self {
            if n < 2 {
                return Err(FigureError::TriangularIndexTooSmall(n));
            }
            let t_n = triangular_number(n);
            if let Some(root) = perfect_square_root(t_n) {
                return Err(FigureError::SquareTriangular { n, t_n, root });
            }
        }
        Ok(())
    }

    /// The `k` of the form `a² − k·b²` the figure argues about.
    pub fn k(&self) -> u64 {
        match *self {
            FigureKind::Sqrt2 => 2,
            FigureKind::Sqrt3 => 3,
            FigureKind::Sqrt5 => 5,
            FigureKind::Sqrt6 => 6,
            FigureKind::Triangular(n) => triangular_number(n),
        }
    }

    /// Rows of the triangular layout, when this kind uses it.
    pub fn rows(&self) -> Option<u32> {
        match *self {
            FigureKind::Sqrt3 => Some(2),
            FigureKind::Sqrt6 => Some(3),
            FigureKind::Triangular(n) => Some(n),
            _ => None,
        }
    }

    pub fn small_count(&self) -> u64 {
        self.k()
    }

    pub fn label(&self) -> String {
        match *self {
            FigureKind::Sqrt2 => "sqrt2".to_owned(),
            FigureKind::Sqrt3 => "sqrt3".to_owned(),
            FigureKind::Sqrt5 => "sqrt5".to_owned(),
            FigureKind::Sqrt6 => "sqrt6".to_owned(),
            FigureKind::Triangular(n) => format!("tri{n}"),
        }
    }

    /// Area of the unit-side shape: 1 for squares, √3/4 for equilateral
    /// triangles, √(25+10√5)/4 for regular pentagons.
    pub fn shape_constant(&self) -> Real {
        match *self {
            FigureKind::Sqrt2 => Real::one(),
            FigureKind::Sqrt5 => {
                let inner =
                    &Real::from_int(25) + &(&Real::from_int(10) * &Real::from_int(5).sqrt());
                &inner.sqrt() / &Real::from_int(4)
            }
            _ => &Real::from_int(3).sqrt() / &Real::from_int(4),
        }
    }

    /// 3 when the layout has triple-covered cells, otherwise 2.
    pub fn max_multiplicity(&self) -> u8 {
        if self.expected_regions().triply_count > 0 {
            3
        } else {
            2
        }
    }

    /// Exact side lengths of the overlap cells (`t`) and uncovered
    /// cells (`s`). For the triangular family `t = (nb−a)/(n−1)` and
    /// `s = b − 2t = (2a−(n+1)b)/(n−1)`; the square and pentagon
    /// layouts have their own forms `2b−a` / `a−b` and `a−2b` / `5b−2a`.
    pub fn side_forms(&self) -> SideForms {
        match *self {
            FigureKind::Sqrt2 => SideForms {
                t: LinearForm::new(rat(-1, 1), rat(2, 1)),
                s: LinearForm::new(rat(1, 1), rat(-1, 1)),
            },
            FigureKind::Sqrt5 => SideForms {
                t: LinearForm::new(rat(1, 1), rat(-2, 1)),
                s: LinearForm::new(rat(-2, 1), rat(5, 1)),
            },
            _ => {
                let n = i64::from(self.rows().expect("triangular layout"));
                SideForms {
                    t: LinearForm::new(rat(-1, n - 1), rat(n, n - 1)),
                    s: LinearForm::new(rat(2, n - 1), rat(-(n + 1), n - 1)),
                }
            }
        }
    }

    /// Expected multiplicity-region counts together with the cell side
    /// forms. The triangular family has `3(n−1)` double cells,
    /// `(n−2)(n−1)/2` triple cells and `n(n−1)/2` uncovered cells.
    pub fn expected_regions(&self) -> ExpectedRegions {
        let forms = self.side_forms();
        let (doubly, triply, uncovered) = match *self {
            FigureKind::Sqrt2 => (1, 0, 2),
            FigureKind::Sqrt5 => (5, 0, 6),
            _ => {
                let n = self.rows().expect("triangular layout");
                (3 * (n - 1), (n - 2) * (n - 1) / 2, n * (n - 1) / 2)
            }
        };
        ExpectedRegions {
            doubly_count: doubly,
            triply_count: triply,
            uncovered_count: uncovered,
            t_side: forms.t,
            s_side: forms.s,
        }
    }
}

/// Region counts and cell sizes a valid figure must exhibit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpectedRegions {
    pub doubly_count: u32,
    pub triply_count: u32,
    pub uncovered_count: u32,
    pub t_side: LinearForm,
    pub s_side: LinearForm,
}

/// A big regular polygon of side `a` with small side-`b` copies placed
/// by the kind's rule.
#[derive(Debug, Clone)]
pub struct Figure {
    pub kind: FigureKind,
    pub a: u64,
    pub b: u64,
    pub big: ConvexPolygon,
    pub smalls: Vec<ConvexPolygon>,
    pub expected: ExpectedRegions,
}

/// Builds the figure for `kind` at the candidate pair `(a, b)`.
///
/// The admissible range is kind-specific. The square and pentagon
/// layouts accept `0 < b < a < 3b`. The triangular layouts accept
/// `0 < b < a ≤ n·b` with `2a ≥ (n+1)·b`, which keeps every small
/// triangle inside the big one, overlap sides nonnegative, and the
/// multiplicity at most 3; convergents of `√k` satisfy this from the
/// first in-range index on.
pub fn build_figure(kind: FigureKind, a: u64, b: u64) -> Result<Figure, FigureError> {
    kind.validate()?;
    let out_of_range = |need: &str| FigureError::OutOfRange {
        kind: kind.label(),
        a,
        b,
        need: need.to_owned(),
    };
    if b == 0 || a <= b {
        return Err(out_of_range("0 < b < a"));
    }
    match kind.rows() {
        None => {
            if a >= 3 * b {
                return Err(out_of_range("b < a < 3b"));
            }
        }
        Some(n) => {
            let n = u64::from(n);
            if a > n * b || 2 * a < (n + 1) * b {
                return Err(out_of_range("b < a ≤ n·b and 2a ≥ (n+1)·b"));
            }
        }
    }

    let side_a = Real::from_u64(a);
    let side_b = Real::from_u64(b);
    let origin = Point::origin();
    let zero = Real::zero();

    let (big, smalls) = match kind {
        FigureKind::Sqrt2 => {
            let big = ConvexPolygon::regular(4, &side_a, &origin, &zero)?;
            let offset = &side_a - &side_b;
            let far = Point::new(offset.clone(), offset);
            let smalls = vec![
                ConvexPolygon::regular(4, &side_b, &origin, &zero)?,
                ConvexPolygon::regular(4, &side_b, &far, &zero)?,
            ];
            (big, smalls)
        }
        FigureKind::Sqrt5 => {
            let big = ConvexPolygon::regular(5, &side_a, &origin, &zero)?;
            let turn = &(&Real::pi() * &Real::from_int(2)) / &Real::from_int(5);
            let mut smalls = Vec::with_capacity(5);
            for (i, corner) in big.vertices().iter().enumerate() {
                // share the corner, run both adjacent edges along the
                // big pentagon's edges
                let rotation = &turn * &Real::from_u64(i as u64);
                smalls.push(ConvexPolygon::regular(5, &side_b, corner, &rotation)?);
            }
            (big, smalls)
        }
        _ => {
            let n = kind.rows().expect("triangular layout");
            let big = ConvexPolygon::regular(3, &side_a, &origin, &zero)?;
            let spacing = &(&side_a - &side_b) / &Real::from_u64(u64::from(n) - 1);
            let half = &Real::one() / &Real::from_int(2);
            let rise = &Real::from_int(3).sqrt() / &Real::from_int(2);
            let mut smalls = Vec::with_capacity(triangular_number(n) as usize);
            for row in 0..n {
                for col in 0..(n - row) {
                    let along = &Real::from_u64(u64::from(col))
                        + &(&Real::from_u64(u64::from(row)) * &half);
                    let anchor = Point::new(
                        &spacing * &along,
                        &(&spacing * &Real::from_u64(u64::from(row))) * &rise,
                    );
                    smalls.push(ConvexPolygon::regular(3, &side_b, &anchor, &zero)?);
                }
            }
            (big, smalls)
        }
    };

    debug_assert_eq!(smalls.len() as u64, kind.small_count());
    Ok(Figure {
        kind,
        a,
        b,
        big,
        smalls,
        expected: kind.expected_regions(),
    })
}

/// One verified identity: `pass` is decided at working precision with
/// the stated tolerance, interpreted relative to the larger magnitude
/// with an absolute floor of the tolerance itself.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub pass: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub tol: f64,
}

impl IdentityCheck {
    fn relative(name: &str, lhs: &Real, rhs: &Real, tol: f64) -> Self {
        let diff = (lhs - rhs).abs();
        let scale = lhs.abs().max(&rhs.abs()).max(&Real::one());
        let pass = diff <= &scale * &Real::from_f64(tol);
        IdentityCheck {
            name: name.to_owned(),
            pass,
            lhs: lhs.to_f64(),
            rhs: rhs.to_f64(),
            tol,
        }
    }

    fn exact_count(name: &str, got: usize, want: u32) -> Self {
        IdentityCheck {
            name: name.to_owned(),
            pass: got == want as usize,
            lhs: got as f64,
            rhs: f64::from(want),
            tol: 0.0,
        }
    }
}

/// Verification outcome for one figure. `residual` is the form value
/// `a² − k·b²` whose shape-scaled value the clipping must reproduce.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub kind: String,
    pub a: u64,
    pub b: u64,
    pub excess: f64,
    pub uncovered: f64,
    pub residual: i64,
    pub pass: bool,
    pub identities: Vec<IdentityCheck>,
}

const AREA_TOL: f64 = 1e-9;

impl Figure {
    pub fn build(kind: FigureKind, a: u64, b: u64) -> Result<Figure, FigureError> {
        build_figure(kind, a, b)
    }

    /// Runs the multiplicity accounting and checks every identity the
    /// kind promises. Failed identities are reported, not panicked on.
    pub fn verify(&self) -> Result<VerificationReport, FigureError> {
        let coverage =
            multiplicity_accounting(&self.big, &self.smalls, self.kind.max_multiplicity())?;
        Ok(self.check_identities(&coverage))
    }

    fn check_identities(&self, coverage: &Coverage) -> VerificationReport {
        let mut identities = Vec::new();
        let c_shape = self.kind.shape_constant();
        let excess = &coverage.excess_area;
        let uncovered = &coverage.uncovered_area;

        // Σ smalls − big = excess − uncovered
        let mut small_sum = Real::zero();
        for s in &self.smalls {
            small_sum = &small_sum + &s.area();
        }
        identities.push(IdentityCheck::relative(
            "accounting",
            &(&small_sum - &self.big.area()),
            &(excess - uncovered),
            AREA_TOL,
        ));

        // uncovered − excess = C_shape·(a² − k·b²)
        let residual = (self.a as i128) * (self.a as i128)
            - (self.kind.k() as i128) * (self.b as i128) * (self.b as i128);
        let residual_real = Real::from_int(residual as i64);
        identities.push(IdentityCheck::relative(
            "pell_residual",
            &(uncovered - excess),
            &(&c_shape * &residual_real),
            AREA_TOL,
        ));

        let expected = &self.expected;
        let t_val = expected.t_side.eval(self.a, self.b);
        let s_val = expected.s_side.eval(self.a, self.b);

        // cell-size decomposition (not available for the pentagon
        // figure, whose double regions are kites rather than scaled
        // copies of the shape)
        if self.kind != FigureKind::Sqrt5 {
            let t_real = Real::from_rational(&t_val);
            let s_real = Real::from_rational(&s_val);
            let weight =
                Real::from_u64(u64::from(expected.doubly_count + 2 * expected.triply_count));
            identities.push(IdentityCheck::relative(
                "excess_cells",
                excess,
                &(&(&weight * &c_shape) * &(&t_real * &t_real)),
                AREA_TOL,
            ));
            identities.push(IdentityCheck::relative(
                "uncovered_cells",
                uncovered,
                &(&(&Real::from_u64(u64::from(expected.uncovered_count)) * &c_shape)
                    * &(&s_real * &s_real)),
                AREA_TOL,
            ));
        } else {
            // the five kites are congruent by symmetry
            let areas: Vec<Real> = coverage.double_regions.iter().map(|r| r.area()).collect();
            if let (Some(max), Some(min)) = (
                areas.iter().cloned().reduce(|x, y| x.max(&y)),
                areas.iter().cloned().reduce(|x, y| x.min(&y)),
            ) {
                identities.push(IdentityCheck::relative(
                    "double_regions_congruent",
                    &max,
                    &min,
                    AREA_TOL,
                ));
            }
        }

        // region counts, meaningful only when the overlap cells have
        // positive size
        if t_val > rat(0, 1) {
            identities.push(IdentityCheck::exact_count(
                "double_region_count",
                coverage.double_regions.len(),
                expected.doubly_count,
            ));
            identities.push(IdentityCheck::exact_count(
                "triple_region_count",
                coverage.triple_regions.len(),
                expected.triply_count,
            ));
        }

        let pass = identities.iter().all(|c| c.pass);
        VerificationReport {
            kind: self.kind.label(),
            a: self.a,
            b: self.b,
            excess: excess.to_f64(),
            uncovered: uncovered.to_f64(),
            residual: residual as i64,
            pass,
            identities,
        }
    }
}
