//! Canonical SMILES generation.
//!
//! Atom ranks are computed by iterative invariant refinement: the initial
//! invariant is `(element, aromatic, degree, charge, explicit H)`, and each
//! round extends an atom's rank with the sorted multiset of
//! `(bond order, neighbor rank)` pairs until the partition stabilizes.
//! Remaining ties are broken one atom at a time — smallest current index
//! within the lowest tied class — and refinement reruns, so two isomorphic
//! inputs whose ties are genuine automorphisms map to the same string.

use crate::molecule::{Atom, BondOrder, Molecule};

/// Canonical SMILES of a molecule: isomorphic graphs map to identical
/// strings; the result re-parses to an isomorphic graph. Stereo is never
/// emitted (the parser discards it).
pub fn canonical_form(mol: &Molecule) -> String {
    if mol.atom_count() == 0 {
        return String::new();
    }
    let ranks = canonical_ranks(mol);
    write_smiles(mol, &ranks)
}

/// Canonical ranks: a permutation of `0..atom_count()`, lower = earlier.
fn canonical_ranks(mol: &Molecule) -> Vec<usize> {
    let n = mol.atom_count();
    let mut ranks = initial_ranks(mol);
    refine(mol, &mut ranks);
    // Symmetry breaking: split the lowest tied class at its smallest
    // member (element/degree/charge are equal within a class by
    // construction) and re-refine until the partition is discrete.
    loop {
        let mut class_of = vec![Vec::new(); n];
        for (atom, &r) in ranks.iter().enumerate() {
            class_of[r].push(atom);
        }
        let Some(tied) = class_of.iter().find(|c| c.len() > 1) else {
            break;
        };
        let chosen = tied[0];
        // Promote `chosen` ahead of its class: ranks are spread out so the
        // gap is representable, then renumbered densely by refine().
        for (atom, r) in ranks.iter_mut().enumerate() {
            *r = 2 * *r + usize::from(atom != chosen);
        }
        refine(mol, &mut ranks);
    }
    ranks
}

fn initial_ranks(mol: &Molecule) -> Vec<usize> {
    let key = |atom: &Atom, degree: usize| {
        (
            atom.element.index(),
            atom.aromatic,
            degree,
            atom.formal_charge,
            atom.explicit_h,
        )
    };
    let keys: Vec<_> = (0..mol.atom_count())
        .map(|i| key(mol.atom(i), mol.degree(i)))
        .collect();
    dense_ranks(&keys)
}

/// One refinement pass to a fixed point. Ranks are renumbered densely.
fn refine(mol: &Molecule, ranks: &mut Vec<usize>) {
    let n = mol.atom_count();
    loop {
        let mut keys: Vec<(usize, Vec<(u8, usize)>)> = Vec::with_capacity(n);
        for i in 0..n {
            let mut env: Vec<(u8, usize)> = mol
                .neighbors(i)
                .iter()
                .map(|&(nb, bi)| (mol.bond(bi).order.index(), ranks[nb]))
                .collect();
            env.sort_unstable();
            keys.push((ranks[i], env));
        }
        let new_ranks = dense_ranks(&keys);
        let stable = new_ranks == *ranks;
        *ranks = new_ranks;
        if stable {
            return;
        }
    }
}

/// Map arbitrary orderable keys to dense ranks 0..k, equal keys equal rank.
fn dense_ranks<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

/// Write a SMILES string visiting atoms in the order induced by `ranking`
/// (lower rank first; ranking need not be dense). Fragments are separated
/// by `.` ordered by their minimal rank. Bond symbols are emitted only
/// where the SMILES default would differ.
pub fn write_smiles(mol: &Molecule, ranking: &[usize]) -> String {
    assert_eq!(ranking.len(), mol.atom_count(), "ranking length mismatch");
    let n = mol.atom_count();
    if n == 0 {
        return String::new();
    }

    let mut writer = Writer {
        mol,
        ranking,
        visited: vec![false; n],
        bond_used: vec![false; mol.bond_count()],
        ring_ids: Vec::new(),
        next_ring: 1,
        out: String::new(),
    };

    let mut roots: Vec<usize> = (0..n).collect();
    roots.sort_unstable_by_key(|&i| ranking[i]);
    let mut first = true;
    for root in roots {
        if writer.visited[root] {
            continue;
        }
        if !first {
            writer.out.push('.');
        }
        first = false;
        writer.mark_tree(root);
        writer.emit(root, None);
    }
    writer.out
}

struct Writer<'a> {
    mol: &'a Molecule,
    ranking: &'a [usize],
    visited: Vec<bool>,
    /// Bonds on the DFS tree of the current component.
    bond_used: Vec<bool>,
    /// (bond index, ring number) of opened ring closures.
    ring_ids: Vec<(usize, u32)>,
    next_ring: u32,
    out: String,
}

impl<'a> Writer<'a> {
    /// First pass: mark tree edges of the component rooted at `root`,
    /// respecting rank order so the emission pass walks the same tree.
    fn mark_tree(&mut self, root: usize) {
        let mut stack = vec![root];
        self.visited[root] = true;
        while let Some(u) = stack.pop() {
            let mut nbrs: Vec<(usize, usize)> = self
                .mol
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&(v, _)| !self.visited[v])
                .collect();
            // Reverse rank order: the stack pops lowest rank first.
            nbrs.sort_unstable_by_key(|&(v, _)| std::cmp::Reverse(self.ranking[v]));
            for (v, bi) in nbrs {
                if !self.visited[v] {
                    self.visited[v] = true;
                    self.bond_used[bi] = true;
                    stack.push(v);
                }
            }
        }
    }

    fn emit(&mut self, u: usize, parent_bond: Option<usize>) {
        self.atom_token(u);

        // Ring closures: bonds not on the tree. Close already-open ids
        // first (ascending number), then open new ones (partner rank order).
        let mut closures: Vec<(usize, usize)> = self
            .mol
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&(_, bi)| !self.bond_used[bi] && Some(bi) != parent_bond)
            .collect();
        closures.sort_unstable_by_key(|&(v, bi)| {
            let open_id = self.ring_id(bi);
            (open_id.is_none(), open_id, self.ranking[v])
        });
        for (v, bi) in closures {
            match self.ring_id(bi) {
                Some(id) => {
                    self.push_ring_digit(id);
                    self.ring_ids.retain(|&(b, _)| b != bi);
                }
                None => {
                    let id = self.next_ring;
                    self.next_ring += 1;
                    self.ring_ids.push((bi, id));
                    if let Some(sym) = bond_symbol(self.mol, bi, u, v) {
                        self.out.push(sym);
                    }
                    self.push_ring_digit(id);
                }
            }
        }

        // Tree children in rank order; all but the last in parentheses.
        let mut children: Vec<(usize, usize)> = self
            .mol
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&(_, bi)| self.bond_used[bi] && Some(bi) != parent_bond)
            .collect();
        children.sort_unstable_by_key(|&(v, _)| self.ranking[v]);
        // A tree bond is consumed once traversed so the child does not
        // walk back up.
        let last = children.len().saturating_sub(1);
        for (k, (v, bi)) in children.into_iter().enumerate() {
            let branch = k != last;
            if branch {
                self.out.push('(');
            }
            if let Some(sym) = bond_symbol(self.mol, bi, u, v) {
                self.out.push(sym);
            }
            self.emit(v, Some(bi));
            if branch {
                self.out.push(')');
            }
        }
    }

    fn ring_id(&self, bond: usize) -> Option<u32> {
        self.ring_ids.iter().find(|&&(b, _)| b == bond).map(|&(_, id)| id)
    }

    fn push_ring_digit(&mut self, id: u32) {
        if id < 10 {
            self.out.push(char::from(b'0' + id as u8));
        } else {
            self.out.push('%');
            self.out.push_str(&format!("{id:02}"));
        }
    }

    fn atom_token(&mut self, i: usize) {
        let atom = self.mol.atom(i);
        let symbol: String = if atom.aromatic {
            atom.element
                .aromatic_symbol()
                .expect("aromatic flag only on aromatic-capable elements")
                .to_string()
        } else {
            atom.element.symbol().to_string()
        };
        let bracket = atom.formal_charge != 0 || atom.explicit_h.is_some();
        if !bracket {
            self.out.push_str(&symbol);
            return;
        }
        self.out.push('[');
        self.out.push_str(&symbol);
        match atom.explicit_h.unwrap_or(0) {
            0 => {}
            1 => self.out.push('H'),
            h => self.out.push_str(&format!("H{h}")),
        }
        match atom.formal_charge {
            0 => {}
            1 => self.out.push('+'),
            -1 => self.out.push('-'),
            c if c > 1 => self.out.push_str(&format!("+{c}")),
            c => self.out.push_str(&format!("-{}", -c)),
        }
        self.out.push(']');
    }
}

/// The explicit bond symbol, or `None` when the SMILES default already
/// encodes the order for this atom pair.
fn bond_symbol(mol: &Molecule, bond: usize, a: usize, b: usize) -> Option<char> {
    let both_aromatic = mol.atom(a).aromatic && mol.atom(b).aromatic;
    match mol.bond(bond).order {
        BondOrder::Single => both_aromatic.then_some('-'),
        BondOrder::Double => Some('='),
        BondOrder::Triple => Some('#'),
        BondOrder::Aromatic => (!both_aromatic).then_some(':'),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_smiles;

    fn canon(s: &str) -> String {
        canonical_form(&parse_smiles(s).unwrap())
    }

    #[test]
    fn atom_order_permutations_agree() {
        assert_eq!(canon("OCC"), canon("CCO"));
        assert_eq!(canon("C(C)(C)O"), canon("OC(C)C"));
        assert_eq!(canon("C1CC1"), canon("C2CC2"));
        assert_eq!(canon("c1ccccc1C"), canon("Cc1ccccc1"));
    }

    #[test]
    fn idempotent() {
        for s in ["CCO", "c1ccncc1", "CC(=O)[O-]", "C1CC1CC(Br)C#N"] {
            let c = canon(s);
            assert_eq!(canon(&c), c, "idempotence failed for {s}");
        }
    }

    #[test]
    fn round_trip_preserves_counts() {
        for s in ["CC(=O)OC", "c1ccc(Cl)cc1", "[NH2-]", "C1CCC2CCCCC2C1"] {
            let mol = parse_smiles(s).unwrap();
            let re = parse_smiles(&canonical_form(&mol)).unwrap();
            assert_eq!(mol.atom_count(), re.atom_count());
            assert_eq!(mol.bond_count(), re.bond_count());
        }
    }

    #[test]
    fn writer_respects_arbitrary_order() {
        let mol = parse_smiles("CCO").unwrap();
        let s = write_smiles(&mol, &[2, 1, 0]);
        assert_eq!(s, "OCC");
    }

    #[test]
    fn fused_rings_round_trip() {
        let mol = parse_smiles("C1CC2CCC1CC2").unwrap();
        let c = canonical_form(&mol);
        let re = parse_smiles(&c).unwrap();
        assert_eq!(re.bond_count(), mol.bond_count());
        assert_eq!(canonical_form(&re), c);
    }
}
