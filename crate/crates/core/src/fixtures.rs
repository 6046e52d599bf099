//! Bundled example instances.

use crate::instance::ChoreInstance;

const TWO_NEGATIVE_COMPONENTS: &str = include_str!("../data/two_negative_components.json");

/// Objective instance on eight agents `a1..a4 = 0..3` and `b1..b4 = 4..7`.
///
/// Negative edges form two components of four vertices: the tree
/// `a1–a2, a2–a3, a2–a4` and the triangle `b1 b2 b3` with the pendant edge
/// `b3–b4`. Dummy edges `a1–a4, a3–b2, b2–b4, a4–b1, b1–a3` link them. Both
/// ends of `b2–b4` lie in the unicyclic component, so no EFX0 orientation
/// exists.
pub fn two_negative_components() -> ChoreInstance {
    ChoreInstance::from_json(TWO_NEGATIVE_COMPONENTS).expect("bundled instance is valid")
}
