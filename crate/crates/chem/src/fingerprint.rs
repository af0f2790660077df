//! Morgan-style circular fingerprints and Tanimoto similarity.
//!
//! Environment identifiers are 64-bit and reproducible across runs and
//! platforms: a fixed mixing function with a frozen seed, no `HashMap`
//! randomness anywhere. Folding into the bit vector is plain modulo.

use thiserror::Error;

use crate::molecule::Molecule;

/// Frozen seed for environment hashing. Changing it changes every stored
/// fingerprint; treat as part of the file-format contract.
const HASH_SEED: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChemError {
    #[error("fingerprint width mismatch: {0} vs {1}")]
    WidthMismatch(usize, usize),
}

/// A fixed-width bit vector. Width must be a positive power of two.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    words: Vec<u64>,
    width: usize,
    radius: usize,
}

impl Fingerprint {
    pub fn empty(width: usize, radius: usize) -> Fingerprint {
        assert!(
            width > 0 && width.is_power_of_two(),
            "fingerprint width must be a positive power of two, got {width}"
        );
        Fingerprint {
            words: vec![0u64; width.div_ceil(64)],
            width,
            radius,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn set_bit(&mut self, pos: usize) {
        let pos = pos % self.width;
        self.words[pos / 64] |= 1u64 << (pos % 64);
    }

    pub fn bit(&self, pos: usize) -> bool {
        let pos = pos % self.width;
        (self.words[pos / 64] >> (pos % 64)) & 1 == 1
    }

    pub fn popcount(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Bits as 0/1 reals, length `width`. Used by the latent codecs.
    pub fn to_dense(&self) -> Vec<f64> {
        (0..self.width).map(|i| f64::from(u8::from(self.bit(i)))).collect()
    }
}

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn combine(h: u64, v: u64) -> u64 {
    mix64(h.rotate_left(5) ^ v)
}

/// All circular-environment identifiers of `mol` up to `radius`, as a
/// multiset (atoms × radii, unsorted). The radius-0 identifier hashes
/// `(element, charge, degree, aromatic)`; the radius-r identifier hashes
/// the atom's own r−1 identifier together with the sorted
/// `(bond order, neighbor r−1 identifier)` pairs.
pub fn morgan_identifiers(mol: &Molecule, radius: usize) -> Vec<u64> {
    let n = mol.atom_count();
    let mut current: Vec<u64> = (0..n)
        .map(|i| {
            let atom = mol.atom(i);
            let mut h = combine(HASH_SEED, u64::from(atom.element.index()));
            h = combine(h, atom.formal_charge as u64);
            h = combine(h, mol.degree(i) as u64);
            h = combine(h, u64::from(atom.aromatic));
            h
        })
        .collect();
    let mut all = current.clone();

    for _ in 0..radius {
        let mut next = Vec::with_capacity(n);
        for i in 0..n {
            let mut env: Vec<(u8, u64)> = mol
                .neighbors(i)
                .iter()
                .map(|&(nb, bi)| (mol.bond(bi).order.index(), current[nb]))
                .collect();
            env.sort_unstable();
            let mut h = combine(HASH_SEED ^ 0xA5A5_A5A5, current[i]);
            for (order, nid) in env {
                h = combine(combine(h, u64::from(order)), nid);
            }
            next.push(h);
        }
        all.extend_from_slice(&next);
        current = next;
    }
    all
}

/// Morgan fingerprint: every environment identifier folded modulo `width`.
pub fn morgan_fingerprint(mol: &Molecule, radius: usize, width: usize) -> Fingerprint {
    let mut fp = Fingerprint::empty(width, radius);
    for id in morgan_identifiers(mol, radius) {
        fp.set_bit((id % width as u64) as usize);
    }
    fp
}

/// Tanimoto similarity `|a ∩ b| / |a ∪ b|`. Two all-zero fingerprints
/// compare as 1.0: both carry zero structural information.
pub fn tanimoto(a: &Fingerprint, b: &Fingerprint) -> Result<f64, ChemError> {
    if a.width != b.width {
        return Err(ChemError::WidthMismatch(a.width, b.width));
    }
    let mut inter = 0u32;
    let mut union = 0u32;
    for (x, y) in a.words.iter().zip(b.words.iter()) {
        inter += (x & y).count_ones();
        union += (x | y).count_ones();
    }
    if union == 0 {
        return Ok(1.0);
    }
    Ok(f64::from(inter) / f64::from(union))
}
