use thiserror::Error;

use crate::element::Element;

/// An atom of the molecular graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Atom {
    pub element: Element,
    pub aromatic: bool,
    pub formal_charge: i32,
    /// Present only for bracket atoms; `Some(0)` means "bracket, no H".
    pub explicit_h: Option<u8>,
}

impl Atom {
    pub fn organic(element: Element) -> Atom {
        Atom {
            element,
            aromatic: false,
            formal_charge: 0,
            explicit_h: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BondOrder {
    Single,
    Double,
    Triple,
    Aromatic,
}

impl BondOrder {
    /// Contribution to the bond-order sum under Kekulé-free accounting:
    /// an aromatic bond counts 1; the shared π electron is accounted once
    /// per aromatic atom (see `Molecule::valence_used`).
    pub fn valence_units(&self) -> u32 {
        match self {
            BondOrder::Single | BondOrder::Aromatic => 1,
            BondOrder::Double => 2,
            BondOrder::Triple => 3,
        }
    }

    /// Stable small integer used in hashes and rank keys.
    pub fn index(&self) -> u8 {
        match self {
            BondOrder::Single => 0,
            BondOrder::Double => 1,
            BondOrder::Triple => 2,
            BondOrder::Aromatic => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bond {
    pub a: usize,
    pub b: usize,
    pub order: BondOrder,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MoleculeError {
    #[error("bond endpoint {index} out of range for {atoms} atoms")]
    EndpointOutOfRange { index: usize, atoms: usize },
    #[error("bond joins atom {0} to itself")]
    SelfBond(usize),
    #[error("duplicate bond between atoms {0} and {1}")]
    DuplicateBond(usize, usize),
}

/// An attributed molecular graph. Immutable once constructed; the adjacency
/// list is precomputed at construction time.
#[derive(Debug, Clone)]
pub struct Molecule {
    atoms: Vec<Atom>,
    bonds: Vec<Bond>,
    /// adjacency[i] = (neighbor atom index, bond index)
    adjacency: Vec<Vec<(usize, usize)>>,
    stereo_ignored: bool,
}

impl Molecule {
    pub fn new(atoms: Vec<Atom>, bonds: Vec<Bond>) -> Result<Molecule, MoleculeError> {
        Molecule::with_flags(atoms, bonds, false)
    }

    pub fn with_flags(
        atoms: Vec<Atom>,
        bonds: Vec<Bond>,
        stereo_ignored: bool,
    ) -> Result<Molecule, MoleculeError> {
        let n = atoms.len();
        let mut adjacency = vec![Vec::new(); n];
        for (bi, bond) in bonds.iter().enumerate() {
            for idx in [bond.a, bond.b] {
                if idx >= n {
                    return Err(MoleculeError::EndpointOutOfRange { index: idx, atoms: n });
                }
            }
            if bond.a == bond.b {
                return Err(MoleculeError::SelfBond(bond.a));
            }
            if adjacency[bond.a].iter().any(|&(nb, _)| nb == bond.b) {
                return Err(MoleculeError::DuplicateBond(bond.a, bond.b));
            }
            adjacency[bond.a].push((bond.b, bi));
            adjacency[bond.b].push((bond.a, bi));
        }
        Ok(Molecule {
            atoms,
            bonds,
            adjacency,
            stereo_ignored,
        })
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn bond_count(&self) -> usize {
        self.bonds.len()
    }

    pub fn atom(&self, i: usize) -> &Atom {
        &self.atoms[i]
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn bond(&self, i: usize) -> &Bond {
        &self.bonds[i]
    }

    pub fn bonds(&self) -> &[Bond] {
        &self.bonds
    }

    /// `(neighbor atom index, bond index)` pairs of atom `i`.
    pub fn neighbors(&self, i: usize) -> &[(usize, usize)] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    /// True when the input carried stereo markers (`/`, `\`, `@`) that the
    /// parser accepted and discarded.
    pub fn stereo_ignored(&self) -> bool {
        self.stereo_ignored
    }

    pub fn is_connected(&self) -> bool {
        let n = self.atoms.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &(v, _) in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// Bond-order sum of atom `i` under Kekulé-free accounting: every bond
    /// contributes its `valence_units`, explicit hydrogens count 1 each, and
    /// an aromatic atom with at least one aromatic bond consumes one extra
    /// shared π unit.
    pub fn valence_used(&self, i: usize) -> u32 {
        let mut used: u32 = self.adjacency[i]
            .iter()
            .map(|&(_, bi)| self.bonds[bi].order.valence_units())
            .sum();
        used += u32::from(self.atoms[i].explicit_h.unwrap_or(0));
        let has_aromatic_bond = self.adjacency[i]
            .iter()
            .any(|&(_, bi)| self.bonds[bi].order == BondOrder::Aromatic);
        if self.atoms[i].aromatic && has_aromatic_bond {
            used += 1;
        }
        used
    }

    pub fn satisfies_valences(&self) -> bool {
        (0..self.atoms.len()).all(|i| self.valence_used(i) <= self.atoms[i].element.max_valence())
    }

    /// Relabel atoms: atom `i` of `self` becomes atom `perm[i]` of the
    /// result. `perm` must be a permutation of `0..atom_count()`.
    pub fn permuted(&self, perm: &[usize]) -> Molecule {
        assert_eq!(perm.len(), self.atoms.len(), "permutation length mismatch");
        let mut atoms = vec![None; self.atoms.len()];
        for (i, atom) in self.atoms.iter().enumerate() {
            atoms[perm[i]] = Some(atom.clone());
        }
        let atoms: Vec<Atom> = atoms.into_iter().map(|a| a.expect("valid permutation")).collect();
        let bonds: Vec<Bond> = self
            .bonds
            .iter()
            .map(|b| Bond {
                a: perm[b.a],
                b: perm[b.b],
                order: b.order,
            })
            .collect();
        Molecule::with_flags(atoms, bonds, self.stereo_ignored)
            .expect("permutation preserves graph invariants")
    }
}
