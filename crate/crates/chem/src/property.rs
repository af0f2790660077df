//! Surrogate scalar property.
//!
//! A deterministic additive score standing in for an external property
//! oracle, so the editing benchmarks run without any cheminformatics
//! dependency. The coefficient table is frozen; changing it invalidates
//! stored property columns.

use crate::element::Element;
use crate::molecule::Molecule;

/// `(description, coefficient)` rows of the frozen surrogate table.
pub const PROPERTY_COEFFICIENTS: &[(&str, f64)] = &[
    ("aliphatic carbon", 0.5),
    ("aromatic carbon", 0.3),
    ("halogen", 0.4),
    ("oxygen", -0.7),
    ("nitrogen", -0.6),
    ("other heteroatom", -0.2),
];

const ALIPHATIC_C: f64 = 0.5;
const AROMATIC_C: f64 = 0.3;
const HALOGEN: f64 = 0.4;
const OXYGEN: f64 = -0.7;
const NITROGEN: f64 = -0.6;
const OTHER_HETERO: f64 = -0.2;

/// Sum the per-atom coefficients. Category counts are accumulated first so
/// the result is bit-identical under any atom reordering.
pub fn surrogate_property(mol: &Molecule) -> f64 {
    let mut counts = [0u32; 6];
    for atom in mol.atoms() {
        let slot = match atom.element {
            Element::C => {
                if atom.aromatic {
                    1
                } else {
                    0
                }
            }
            Element::O => 3,
            Element::N => 4,
            e if e.is_halogen() => 2,
            _ => 5,
        };
        counts[slot] += 1;
    }
    let coeffs = [ALIPHATIC_C, AROMATIC_C, HALOGEN, OXYGEN, NITROGEN, OTHER_HETERO];
    counts
        .iter()
        .zip(coeffs.iter())
        .map(|(&n, &c)| f64::from(n) * c)
        .sum()
}
