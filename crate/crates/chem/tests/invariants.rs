//! Cross-cutting invariants of the chemistry kernel: canonicalization and
//! fingerprints under atom-order rewrites, parse/canonical round trips
//! checked against an independent graph-isomorphism oracle, and parser
//! totality over arbitrary input.

use petgraph::graph::UnGraph;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use phame_chem::{
    canonical_form, demo, is_valid, morgan_fingerprint, parse_smiles, surrogate_property,
    tanimoto, write_smiles, BondOrder, Molecule,
};

type AtomKey = (u8, bool, i32, Option<u8>);

fn to_petgraph(mol: &Molecule) -> UnGraph<AtomKey, BondOrder> {
    let mut g = UnGraph::new_undirected();
    let nodes: Vec<_> = mol
        .atoms()
        .iter()
        .map(|a| {
            g.add_node((
                a.element.index(),
                a.aromatic,
                a.formal_charge,
                a.explicit_h,
            ))
        })
        .collect();
    for b in mol.bonds() {
        g.add_edge(nodes[b.a], nodes[b.b], b.order);
    }
    g
}

/// Independent oracle: VF2 isomorphism with full atom/bond matching.
fn isomorphic(a: &Molecule, b: &Molecule) -> bool {
    petgraph::algo::is_isomorphic_matching(
        &to_petgraph(a),
        &to_petgraph(b),
        |x, y| x == y,
        |x, y| x == y,
    )
}

#[test]
fn parse_canonical_round_trip_is_isomorphic() {
    for smiles in demo::corpus200() {
        let mol = parse_smiles(&smiles).unwrap();
        let canon = canonical_form(&mol);
        let re = parse_smiles(&canon)
            .unwrap_or_else(|e| panic!("canonical form {canon} of {smiles} fails to parse: {e}"));
        assert!(
            isomorphic(&mol, &re),
            "round trip of {smiles} via {canon} is not isomorphic"
        );
        assert_eq!(canonical_form(&re), canon, "idempotence failed for {smiles}");
    }
}

#[test]
fn canonical_and_fingerprint_invariant_under_rewrites() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for smiles in demo::corpus200() {
        let mol = parse_smiles(&smiles).unwrap();
        let canon = canonical_form(&mol);
        let fp = morgan_fingerprint(&mol, 2, 1024);
        let prop = surrogate_property(&mol);
        let n = mol.atom_count();
        for _ in 0..20 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let shuffled = mol.permuted(&perm);
            // A rewrite: emit with a random atom ordering, re-parse.
            let mut ranking: Vec<usize> = (0..n).collect();
            ranking.shuffle(&mut rng);
            let rewritten = write_smiles(&shuffled, &ranking);
            let reparsed = parse_smiles(&rewritten)
                .unwrap_or_else(|e| panic!("rewrite {rewritten} of {smiles} fails: {e}"));

            assert_eq!(canonical_form(&shuffled), canon, "permuted {smiles}");
            assert_eq!(canonical_form(&reparsed), canon, "rewritten {smiles}");
            assert_eq!(morgan_fingerprint(&shuffled, 2, 1024), fp);
            assert_eq!(morgan_fingerprint(&reparsed, 2, 1024), fp);
            assert_eq!(surrogate_property(&reparsed), prop);
        }
    }
}

#[test]
fn demo_corpus_is_entirely_valid() {
    for smiles in demo::corpus200() {
        assert!(is_valid(&smiles), "{smiles} should be valid");
    }
}

proptest! {
    /// The parser is total: any ASCII input either parses or reports a
    /// fault offset within the input.
    #[test]
    fn parser_never_panics_and_offsets_are_bounded(text in "[ -~]{0,40}") {
        match parse_smiles(&text) {
            Ok(mol) => prop_assert!(mol.atom_count() > 0),
            Err(e) => prop_assert!(e.offset <= text.len(), "offset {} > len {}", e.offset, text.len()),
        }
    }

    /// Tanimoto is symmetric, bounded, and 1 on identical inputs.
    #[test]
    fn tanimoto_properties(bits_a in proptest::collection::vec(0usize..512, 0..40),
                           bits_b in proptest::collection::vec(0usize..512, 0..40)) {
        let mut a = phame_chem::Fingerprint::empty(512, 0);
        let mut b = phame_chem::Fingerprint::empty(512, 0);
        for i in bits_a { a.set_bit(i); }
        for i in bits_b { b.set_bit(i); }
        let ab = tanimoto(&a, &b).unwrap();
        let ba = tanimoto(&b, &a).unwrap();
        prop_assert_eq!(ab, ba);
        prop_assert!((0.0..=1.0).contains(&ab));
        prop_assert_eq!(tanimoto(&a, &a).unwrap(), 1.0);
    }
}
