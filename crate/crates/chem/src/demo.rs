//! Deterministic demo corpus.
//!
//! 200 small molecules assembled from scaffold × substituent combinations,
//! deduplicated by canonical form. Used by the test suites and the CLI
//! quickstart; `data/demo_corpus.smi` in the repository is the frozen
//! rendering of [`corpus_file_string`].

use crate::{canonical_form, is_valid, parse_smiles, surrogate_property};

const SCAFFOLDS: &[&str] = &[
    "C", "CC", "CCC", "CCCC", "CCCCC", "CCCCCC", "CC(C)C", "CCC(C)C",
    "C1CC1", "C1CCC1", "C1CCCC1", "C1CCCCC1", "C1CCOC1", "C1CCNC1",
    "c1ccccc1", "c1ccncc1", "c1ccc2ccccc2c1",
];

const SUBSTITUENTS: &[&str] = &[
    "C", "CC", "CCC", "O", "OC", "N", "NC", "F", "Cl", "Br", "I", "S",
    "SC", "C#N", "C=O", "C(=O)O", "C(=O)OC", "C(=O)N", "C(C)C",
    "C(F)(F)F",
];

/// Exactly 200 distinct valid molecules, in frozen generation order.
pub fn corpus200() -> Vec<String> {
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for scaffold in SCAFFOLDS {
        for substituent in SUBSTITUENTS {
            let smiles = format!("{scaffold}{substituent}");
            if !is_valid(&smiles) {
                continue;
            }
            let canon = canonical_form(&parse_smiles(&smiles).expect("validated"));
            if seen.contains(&canon) {
                continue;
            }
            seen.push(canon);
            out.push(smiles);
            if out.len() == 200 {
                return out;
            }
        }
    }
    panic!(
        "demo corpus generator produced only {} molecules; extend the tables",
        out.len()
    );
}

/// Corpus file rendering: `smiles<TAB>surrogate property` per line.
pub fn corpus_file_string() -> String {
    let mut s = String::from("# demo corpus: 200 molecules, surrogate property column\n");
    for smiles in corpus200() {
        let p = surrogate_property(&parse_smiles(&smiles).expect("validated"));
        s.push_str(&format!("{smiles}\t{p}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_hundred_distinct_valid_molecules() {
        let corpus = corpus200();
        assert_eq!(corpus.len(), 200);
        let mut canons: Vec<String> = corpus
            .iter()
            .map(|s| {
                assert!(is_valid(s), "demo molecule {s} is invalid");
                canonical_form(&parse_smiles(s).unwrap())
            })
            .collect();
        canons.sort();
        canons.dedup();
        assert_eq!(canons.len(), 200);
    }
}
