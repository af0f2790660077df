//! Minimal chemistry kernel for the guided-diffusion molecular editing
//! laboratory.
//!
//! The crate covers exactly what the rest of the workspace needs from
//! chemistry: a SMILES-subset parser producing attributed molecular graphs,
//! a Morgan-style canonicalizer and circular fingerprint, Tanimoto
//! similarity, a documented surrogate scalar property, and the corpus file
//! format. Everything is a pure function over immutable data and is safe to
//! call from concurrent workers.

mod canon;
mod corpus;
pub mod demo;
mod element;
mod fingerprint;
mod molecule;
mod parser;
mod property;

pub use canon::{canonical_form, write_smiles};
pub use corpus::{parse_corpus_str, read_corpus, CorpusError, CorpusRecord};
pub use element::Element;
pub use fingerprint::{
    morgan_fingerprint, morgan_identifiers, tanimoto, ChemError, Fingerprint,
};
pub use molecule::{Atom, Bond, BondOrder, Molecule, MoleculeError};
pub use parser::{parse_smiles, ParseError, ParseErrorKind};
pub use property::{surrogate_property, PROPERTY_COEFFICIENTS};

/// True iff `text` parses, the graph is a single connected fragment, and
/// every atom satisfies the valence table. Total: never panics or errors.
pub fn is_valid(text: &str) -> bool {
    match parse_smiles(text) {
        Ok(mol) => mol.is_connected() && mol.satisfies_valences(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validity_of_simple_molecules() {
        assert!(is_valid("CCO"));
        assert!(is_valid("c1ccccc1"));
        assert!(!is_valid("C(C)(C)(C)(C)C")); // pentavalent carbon
        assert!(!is_valid(""));
        assert!(!is_valid("CC.O")); // parses, but multi-fragment
    }
}
