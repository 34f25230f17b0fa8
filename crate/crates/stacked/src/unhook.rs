//! Edge-unhooking on color-0 stars and its inverse.
//!
//! Unhooking square `l` detaches it from its color-0 star, leaving it alone
//! on a new star. In the colored graph this exchanges the color-0 edges at
//! `w_l` and at the white vertex of the preceding square.

use crate::error::StackedError;
use crate::map::StackedMap;

/// Outcome of an unhooking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unhooking {
    pub map: StackedMap,
    /// Number of colors `i` whose faces at the two corners around the
    /// unhooked edge are distinct.
    pub distinct_faces: usize,
    /// `Φ₀` change predicted by the face count: `D − 2𝓘₂`.
    pub delta_zero_score: i64,
    /// The number of components increased.
    pub bridge: bool,
    /// Square preceding `l` on its star, where [`hook`] reinserts it.
    pub predecessor: usize,
}

/// Unhooks the color-0 edge of square `l`.
pub fn unhook(map: &StackedMap, l: usize) -> Result<Unhooking, StackedError> {
    let n = map.square_count();
    if l >= n {
        return Err(StackedError::NotUnhookable(l, "no such square".into()));
    }
    let mut rot = map.zero_rotation();
    if rot[l] == l {
        return Err(StackedError::NotUnhookable(l, "star of degree one".into()));
    }
    let pred = (0..n)
        .find(|&x| rot[x] == l)
        .expect("rotation is a permutation");
    if map.marked().contains(&l) || map.marked().contains(&pred) {
        return Err(StackedError::NotUnhookable(
            l,
            "adjacent corner is marked".into(),
        ));
    }
    let d = map.dimension();
    let distinct_faces = (1..=d)
        .filter(|&i| {
            let labels = map.zero_face_labels(i);
            labels[l] != labels[pred]
        })
        .count();
    rot[pred] = rot[l];
    rot[l] = l;
    let out = map.with_zero_rotation(&rot, map.marked().clone())?;
    let bridge = out.component_count() > map.component_count();
    Ok(Unhooking {
        map: out,
        distinct_faces,
        delta_zero_score: d as i64 - 2 * distinct_faces as i64,
        bridge,
        predecessor: pred,
    })
}

/// Hooks the lone square `l` onto the color-0 star of `p`, right after `p`.
pub fn hook(map: &StackedMap, l: usize, p: usize) -> Result<StackedMap, StackedError> {
    let n = map.square_count();
    if l >= n || p >= n || l == p {
        return Err(StackedError::NotHookable(l, "bad squares".into()));
    }
    let mut rot = map.zero_rotation();
    if rot[l] != l {
        return Err(StackedError::NotHookable(
            l,
            "square is not alone on its star".into(),
        ));
    }
    if map.marked().contains(&p) || map.marked().contains(&l) {
        return Err(StackedError::NotHookable(l, "corner is marked".into()));
    }
    rot[l] = rot[p];
    rot[p] = l;
    map.with_zero_rotation(&rot, map.marked().clone())
}
