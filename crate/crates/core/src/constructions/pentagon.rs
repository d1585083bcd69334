//! The two exact facts behind the pentagon construction: the interior
//! angle chase and the shared-side computation, both carried out in
//! closed form with zero tolerance.

use std::fmt;
use std::ops::{Add, Sub};

use crate::exact::{rat, QuadExt, Rational};

use super::FigureError;

/// An angle expressed as an exact rational multiple of π.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngleRat(Rational);

impl AngleRat {
    pub fn new(num: i64, den: i64) -> Self {
        AngleRat(rat(num, den))
    }

    pub fn multiple_of_pi(&self) -> &Rational {
        &self.0
    }

    pub fn scaled(&self, num: i64, den: i64) -> Self {
        AngleRat(&self.0 * rat(num, den))
    }
}

impl Add for &AngleRat {
    type Output = AngleRat;
    fn add(self, rhs: &AngleRat) -> AngleRat {
        AngleRat(&self.0 + &rhs.0)
    }
}

impl Sub for &AngleRat {
    type Output = AngleRat;
    fn sub(self, rhs: &AngleRat) -> AngleRat {
        AngleRat(&self.0 - &rhs.0)
    }
}

impl fmt::Display for AngleRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·π", self.0)
    }
}

/// Reproduces the angle bookkeeping that shows every corner of the
/// doubly covered small pentagons equals 3π/5, in exact rational
/// multiples of π. The returned list records each derived quantity.
pub fn pentagon_angle_chase() -> Vec<(String, AngleRat)> {
    // a pentagon triangulates into 5 triangles around the center,
    // giving 5π − 2π for the angle sum
    let angle_sum = AngleRat::new(5 - 2, 1);
    let regular = angle_sum.scaled(1, 5);
    let straight = AngleRat::new(1, 1);
    // the uncovered edge triangle is supplementary to a regular corner
    let triangle_base = &straight - &regular;
    // and the small-pentagon corners next to its base are supplementary
    // to the triangle's base angles
    let base_adjacent = &straight - &triangle_base;
    // the next two corners are interior angles of a regular pentagon
    let interior = regular.clone();
    // the remaining corner closes the angle sum
    let four_known = &(&base_adjacent + &base_adjacent) + &(&interior + &interior);
    let apex = &angle_sum - &four_known;

    assert_eq!(regular, AngleRat::new(3, 5));
    assert_eq!(triangle_base, AngleRat::new(2, 5));
    for corner in [&base_adjacent, &interior, &apex] {
        assert_eq!(*corner, regular, "small pentagon corner differs from 3π/5");
    }

    vec![
        ("pentagon_angle_sum".to_owned(), angle_sum),
        ("regular_pentagon_angle".to_owned(), regular),
        ("triangle_base_angle".to_owned(), triangle_base),
        ("base_adjacent_angle".to_owned(), base_adjacent),
        ("interior_angle".to_owned(), interior),
        ("apex_angle".to_owned(), apex),
    ]
}

/// Computes the slanted side `x` of a doubly covered small pentagon
/// exactly in `Q(√5)`, normalized to `b = 1`, `a = √5`:
///
/// `x = b − 2(a−2b)/(2·cos(2π/5))` with `cos(2π/5) = (√5−1)/4`,
///
/// evaluated along two independent routes (field inverse vs. manual
/// conjugation) and required to equal `√5 − 2 = a − 2b` exactly.
pub fn pentagon_lemma_side() -> Result<QuadExt, FigureError> {
    let field = |p: Rational, q: Rational| QuadExt::new(5, p, q).expect("5 is squarefree");
    let b = field(rat(1, 1), rat(0, 1));
    let a = field(rat(0, 1), rat(1, 1)); // √5
    let cos = field(rat(-1, 4), rat(1, 4)); // (√5 − 1)/4

    // cos(2π/5) is a root of 4c² + 2c − 1
    let min_poly = cos
        .mul(&cos)
        .and_then(|c2| c2.scale(&rat(4, 1)).add(&cos.scale(&rat(2, 1))))
        .and_then(|s| s.add(&field(rat(-1, 1), rat(0, 1))))
        .expect("same field");
    if !min_poly.is_zero() {
        return Err(FigureError::PentagonLemma(format!(
            "4·cos² + 2·cos − 1 = {min_poly}, expected 0"
        )));
    }

    let overhang = a.sub(&b.scale(&rat(2, 1))).expect("same field"); // a − 2b

    // route one: divide by cos through the field inverse
    let via_inverse = b
        .sub(
            &overhang
                .mul(&cos.inv().expect("cos ≠ 0"))
                .expect("same field"),
        )
        .expect("same field");

    // route two: rationalize by hand — 1/cos = 4/(√5−1) = √5 + 1
    let cos_reciprocal = field(rat(1, 1), rat(1, 1));
    let via_conjugate = b
        .sub(&overhang.mul(&cos_reciprocal).expect("same field"))
        .expect("same field");

    if via_inverse != via_conjugate {
        return Err(FigureError::PentagonLemma(format!(
            "evaluation orders disagree: {via_inverse} vs {via_conjugate}"
        )));
    }
    if via_inverse != overhang {
        return Err(FigureError::PentagonLemma(format!(
            "x = {via_inverse}, expected a − 2b = {overhang}"
        )));
    }
    let expected = field(rat(-2, 1), rat(1, 1)); // √5 − 2
    if via_inverse != expected {
        return Err(FigureError::PentagonLemma(format!(
            "x = {via_inverse}, expected √5 − 2"
        )));
    }
    Ok(via_inverse)
}
