//! Multiplicity accounting for a big polygon covered by small ones.
//!
//! Inclusion–exclusion is carried to triple intersections, which is
//! exact as long as no point is covered more than three times — a
//! condition that is actively checked one level deeper. For a point
//! covered `m ≤ 3` times, the pairwise sum counts it `C(m,2)` times and
//! the triple sum `C(m,3)` times, so
//! `excess = Σ(m−1)·area = Σ_pairs − Σ_triples` holds without
//! correction terms.

use super::{collinearity_eps, ConvexPolygon, GeometryError, Real};

/// Area bookkeeping plus the distinct multiplicity-2 and multiplicity-3
/// regions (a pairwise intersection that coincides with a triple region
/// is reported once, as a triple region).
#[derive(Debug, Clone)]
pub struct Coverage {
    pub union_area: Real,
    pub excess_area: Real,
    pub uncovered_area: Real,
    pub double_regions: Vec<ConvexPolygon>,
    pub triple_regions: Vec<ConvexPolygon>,
}

fn bboxes_overlap(
    a: &(Real, Real, Real, Real),
    b: &(Real, Real, Real, Real),
    slack: &Real,
) -> bool {
    !(&a.2 + slack < b.0 || &b.2 + slack < a.0 || &a.3 + slack < b.1 || &b.3 + slack < a.1)
}

/// Computes union, excess (multiplicity-weighted overflow) and
/// uncovered area for `big` covered by `smalls`.
///
/// Every small polygon must lie inside `big` up to the collinearity
/// tolerance, and no point may be covered more than `max_multiplicity`
/// (2 or 3) times; violations are errors, not silent miscounts.
pub fn multiplicity_accounting(
    big: &ConvexPolygon,
    smalls: &[ConvexPolygon],
    max_multiplicity: u8,
) -> Result<Coverage, GeometryError> {
    if !(2..=3).contains(&max_multiplicity) {
        return Err(GeometryError::UnsupportedMultiplicity(max_multiplicity));
    }

    let mut scale = big.max_abs_coord();
    for s in smalls {
        scale = scale.max(&s.max_abs_coord());
    }
    let eps = collinearity_eps(&scale);

    for (i, s) in smalls.iter().enumerate() {
        for v in s.vertices() {
            if !big.contains_point(v, &eps) {
                return Err(GeometryError::SmallPolygonOutside(i));
            }
        }
    }

    let boxes: Vec<_> = smalls.iter().map(|s| s.bbox()).collect();

    let mut pair_sum = Real::zero();
    let mut pairs: Vec<(usize, usize, ConvexPolygon)> = Vec::new();
    for i in 0..smalls.len() {
        for j in (i + 1)..smalls.len() {
            if !bboxes_overlap(&boxes[i], &boxes[j], &eps) {
                continue;
            }
            if let Some(region) = smalls[i].clip(&smalls[j]) {
                pair_sum = &pair_sum + &region.area();
                pairs.push((i, j, region));
            }
        }
    }

    let mut triple_sum = Real::zero();
    let mut triples: Vec<(usize, usize, usize, ConvexPolygon)> = Vec::new();
    for (i, j, region) in &pairs {
        let region_box = region.bbox();
        for l in (j + 1)..smalls.len() {
            if !bboxes_overlap(&region_box, &boxes[l], &eps) {
                continue;
            }
            if let Some(triple) = region.clip(&smalls[l]) {
                if max_multiplicity == 2 {
                    return Err(GeometryError::MultiplicityExceeded(2));
                }
                triple_sum = &triple_sum + &triple.area();
                triples.push((*i, *j, l, triple));
            }
        }
    }

    if max_multiplicity == 3 {
        for (_, _, l, triple) in &triples {
            let triple_box = triple.bbox();
            for q in (l + 1)..smalls.len() {
                if !bboxes_overlap(&triple_box, &boxes[q], &eps) {
                    continue;
                }
                if triple.clip(&smalls[q]).is_some() {
                    return Err(GeometryError::MultiplicityExceeded(3));
                }
            }
        }
    }

    let mut small_sum = Real::zero();
    for s in smalls {
        small_sum = &small_sum + &s.area();
    }
    let union_area = &(&small_sum - &pair_sum) + &triple_sum;
    let excess_area = &pair_sum - &triple_sum;
    let uncovered_area = &big.area() - &union_area;

    // a pairwise region between two members of a triple-covered trio is
    // the triple cell itself; report it only once
    let area_tol = super::area_eps(&scale);
    let double_regions = pairs
        .into_iter()
        .filter_map(|(_, _, region)| {
            let absorbed = triples.iter().any(|(_, _, _, t)| match region.clip(t) {
                Some(common) => (&region.area() - &common.area()) <= area_tol,
                None => false,
            });
            (!absorbed).then_some(region)
        })
        .collect();
    let triple_regions = triples.into_iter().map(|(_, _, _, t)| t).collect();

    Ok(Coverage {
        union_area,
        excess_area,
        uncovered_area,
        double_regions,
        triple_regions,
    })
}
