//! SMILES-subset parser.
//!
//! Supported grammar: organic-subset atoms (`B C N O P S F Cl Br I`),
//! aromatic lowercase atoms (`b c n o p s`), bracket atoms with H-count and
//! charge, bond symbols `- = # :`, branches, ring closures (`1`..`9`,
//! `%nn`), and `.` fragment separators. Stereo markers (`/ \ @`) are
//! accepted and ignored; the molecule carries a warning flag. Isotopes and
//! wildcard atoms are not supported.

use std::collections::BTreeMap;
use thiserror::Error;

use crate::element::Element;
use crate::molecule::{Atom, Bond, BondOrder, Molecule};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnclosedBranch,
    UnmatchedRingBond,
    UnknownAtomSymbol,
    InvalidCharge,
}

/// A parse fault. `offset` is the byte offset of the fault and always lies
/// within `[0, text.len()]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("{} at byte {offset}", kind_message(*.kind))]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub offset: usize,
}

fn kind_message(kind: ParseErrorKind) -> &'static str {
    match kind {
        ParseErrorKind::UnclosedBranch => "unmatched or misplaced branch parenthesis",
        ParseErrorKind::UnmatchedRingBond => "unmatched or malformed ring bond",
        ParseErrorKind::UnknownAtomSymbol => "unknown or missing atom symbol",
        ParseErrorKind::InvalidCharge => "invalid charge specification",
    }
}

fn err(kind: ParseErrorKind, offset: usize) -> ParseError {
    ParseError { kind, offset }
}

struct RingOpen {
    atom: usize,
    bond: Option<BondOrder>,
    offset: usize,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    atoms: Vec<Atom>,
    bonds: Vec<Bond>,
    bonded: Vec<(usize, usize)>,
    prev: Option<usize>,
    pending_bond: Option<BondOrder>,
    branch_stack: Vec<(usize, usize)>,
    ring_open: BTreeMap<u32, RingOpen>,
    stereo_seen: bool,
}

/// Parse `text` into a molecular graph. Multi-fragment inputs (`.`) parse
/// successfully; connectivity is the validity predicate's concern.
pub fn parse_smiles(text: &str) -> Result<Molecule, ParseError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        atoms: Vec::new(),
        bonds: Vec::new(),
        bonded: Vec::new(),
        prev: None,
        pending_bond: None,
        branch_stack: Vec::new(),
        ring_open: BTreeMap::new(),
        stereo_seen: false,
    };
    p.run()?;
    Molecule::with_flags(p.atoms, p.bonds, p.stereo_seen)
        .map_err(|_| err(ParseErrorKind::UnmatchedRingBond, 0))
}

impl<'a> Parser<'a> {
    fn run(&mut self) -> Result<(), ParseError> {
        if self.bytes.is_empty() {
            return Err(err(ParseErrorKind::UnknownAtomSymbol, 0));
        }
        while self.pos < self.bytes.len() {
            let i = self.pos;
            match self.bytes[i] {
                b'(' => {
                    let Some(atom) = self.prev else {
                        return Err(err(ParseErrorKind::UnclosedBranch, i));
                    };
                    self.branch_stack.push((atom, i));
                    self.pos += 1;
                }
                b')' => {
                    if self.pending_bond.is_some() {
                        return Err(err(ParseErrorKind::UnknownAtomSymbol, i));
                    }
                    let Some((atom, _)) = self.branch_stack.pop() else {
                        return Err(err(ParseErrorKind::UnclosedBranch, i));
                    };
                    self.prev = Some(atom);
                    self.pos += 1;
                }
                b'-' | b'=' | b'#' | b':' => {
                    if self.pending_bond.is_some() || self.prev.is_none() {
                        return Err(err(ParseErrorKind::UnknownAtomSymbol, i));
                    }
                    self.pending_bond = Some(match self.bytes[i] {
                        b'-' => BondOrder::Single,
                        b'=' => BondOrder::Double,
                        b'#' => BondOrder::Triple,
                        _ => BondOrder::Aromatic,
                    });
                    self.pos += 1;
                }
                // Directional single bonds: accepted, stereo discarded.
                b'/' | b'\\' => {
                    if self.pending_bond.is_some() || self.prev.is_none() {
                        return Err(err(ParseErrorKind::UnknownAtomSymbol, i));
                    }
                    self.pending_bond = Some(BondOrder::Single);
                    self.stereo_seen = true;
                    self.pos += 1;
                }
                b'.' => {
                    if self.pending_bond.is_some() || self.prev.is_none() {
                        return Err(err(ParseErrorKind::UnknownAtomSymbol, i));
                    }
                    if !self.branch_stack.is_empty() {
                        return Err(err(ParseErrorKind::UnclosedBranch, self.branch_stack[0].1));
                    }
                    self.prev = None;
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    let n = u32::from(self.bytes[i] - b'0');
                    self.pos += 1;
                    self.ring_closure(n, i)?;
                }
                b'%' => {
                    let d0 = self.bytes.get(i + 1).copied();
                    let d1 = self.bytes.get(i + 2).copied();
                    match (d0, d1) {
                        (Some(a), Some(b)) if a.is_ascii_digit() && b.is_ascii_digit() => {
                            let n = u32::from(a - b'0') * 10 + u32::from(b - b'0');
                            self.pos += 3;
                            self.ring_closure(n, i)?;
                        }
                        _ => return Err(err(ParseErrorKind::UnmatchedRingBond, i)),
                    }
                }
                b'[' => {
                    let atom = self.parse_bracket()?;
                    self.attach(atom)?;
                }
                b'A'..=b'Z' => {
                    let atom = self.parse_organic()?;
                    self.attach(atom)?;
                }
                b'a'..=b'z' => {
                    let sym = &self.bytes[i..i + 1];
                    let sym = std::str::from_utf8(sym).expect("ascii");
                    let Some(element) = Element::from_aromatic_symbol(sym) else {
                        return Err(err(ParseErrorKind::UnknownAtomSymbol, i));
                    };
                    self.pos += 1;
                    self.attach(Atom {
                        element,
                        aromatic: true,
                        formal_charge: 0,
                        explicit_h: None,
                    })?;
                }
                _ => return Err(err(ParseErrorKind::UnknownAtomSymbol, i)),
            }
        }
        if let Some((_, offset)) = self.branch_stack.first() {
            return Err(err(ParseErrorKind::UnclosedBranch, *offset));
        }
        if let Some(open) = self.ring_open.values().min_by_key(|o| o.offset) {
            return Err(err(ParseErrorKind::UnmatchedRingBond, open.offset));
        }
        if self.pending_bond.is_some() {
            return Err(err(ParseErrorKind::UnknownAtomSymbol, self.bytes.len()));
        }
        Ok(())
    }

    fn parse_organic(&mut self) -> Result<Atom, ParseError> {
        let i = self.pos;
        // Two-character symbols first (Cl, Br).
        if i + 1 < self.bytes.len() {
            let two = std::str::from_utf8(&self.bytes[i..i + 2]).expect("ascii");
            if let Some(element) = Element::from_symbol(two) {
                if two.len() == 2 && (two == "Cl" || two == "Br") {
                    self.pos += 2;
                    return Ok(Atom::organic(element));
                }
            }
        }
        let one = std::str::from_utf8(&self.bytes[i..i + 1]).expect("ascii");
        match Element::from_symbol(one) {
            Some(element) => {
                self.pos += 1;
                Ok(Atom::organic(element))
            }
            None => Err(err(ParseErrorKind::UnknownAtomSymbol, i)),
        }
    }

    fn parse_bracket(&mut self) -> Result<Atom, ParseError> {
        let open = self.pos;
        let mut j = open + 1;
        let sym_start = j;

        let two: Option<&str> = self
            .bytes
            .get(j..j + 2)
            .map(|s| std::str::from_utf8(s).expect("ascii"));
        let one: Option<&str> = self
            .bytes
            .get(j..j + 1)
            .map(|s| std::str::from_utf8(s).expect("ascii"));

        let (element, aromatic) = if let Some(two) = two.filter(|s| matches!(*s, "Cl" | "Br")) {
            j += 2;
            (Element::from_symbol(two).expect("checked"), false)
        } else if let Some(one) = one {
            if let Some(e) = Element::from_symbol(one) {
                j += 1;
                (e, false)
            } else if let Some(e) = Element::from_aromatic_symbol(one) {
                j += 1;
                (e, true)
            } else {
                return Err(err(ParseErrorKind::UnknownAtomSymbol, sym_start));
            }
        } else {
            return Err(err(ParseErrorKind::UnknownAtomSymbol, sym_start));
        };

        let mut explicit_h: u8 = 0;
        let mut h_seen = false;
        let mut charge: i32 = 0;
        let mut charge_seen = false;
        loop {
            match self.bytes.get(j) {
                Some(b']') => {
                    j += 1;
                    break;
                }
                Some(b'@') => {
                    self.stereo_seen = true;
                    j += 1;
                }
                Some(b'H') => {
                    if h_seen {
                        return Err(err(ParseErrorKind::UnknownAtomSymbol, j));
                    }
                    h_seen = true;
                    j += 1;
                    let mut count: u32 = 0;
                    let mut digits = 0;
                    while let Some(d) = self.bytes.get(j).filter(|b| b.is_ascii_digit()) {
                        count = count * 10 + u32::from(d - b'0');
                        digits += 1;
                        j += 1;
                        if digits > 2 {
                            return Err(err(ParseErrorKind::UnknownAtomSymbol, j - 1));
                        }
                    }
                    explicit_h = if digits == 0 {
                        1
                    } else {
                        u8::try_from(count)
                            .map_err(|_| err(ParseErrorKind::UnknownAtomSymbol, j - 1))?
                    };
                }
                Some(sign @ (b'+' | b'-')) => {
                    if charge_seen {
                        return Err(err(ParseErrorKind::InvalidCharge, j));
                    }
                    charge_seen = true;
                    let sign_byte = *sign;
                    let sign_val: i32 = if sign_byte == b'+' { 1 } else { -1 };
                    j += 1;
                    let mut magnitude: i32 = 1;
                    if let Some(d) = self.bytes.get(j).filter(|b| b.is_ascii_digit()) {
                        magnitude = i32::from(d - b'0');
                        j += 1;
                        if self.bytes.get(j).is_some_and(|b| b.is_ascii_digit()) {
                            return Err(err(ParseErrorKind::InvalidCharge, j));
                        }
                        if magnitude == 0 {
                            return Err(err(ParseErrorKind::InvalidCharge, j - 1));
                        }
                    } else {
                        while self.bytes.get(j) == Some(&sign_byte) {
                            magnitude += 1;
                            j += 1;
                            if magnitude > 9 {
                                return Err(err(ParseErrorKind::InvalidCharge, j - 1));
                            }
                        }
                    }
                    charge = sign_val * magnitude;
                }
                _ => return Err(err(ParseErrorKind::UnknownAtomSymbol, j.min(self.bytes.len()))),
            }
        }

        self.pos = j;
        Ok(Atom {
            element,
            aromatic,
            formal_charge: charge,
            explicit_h: Some(explicit_h),
        })
    }

    fn default_bond(&self, a: usize, b: usize) -> BondOrder {
        if self.atoms[a].aromatic && self.atoms[b].aromatic {
            BondOrder::Aromatic
        } else {
            BondOrder::Single
        }
    }

    fn attach(&mut self, atom: Atom) -> Result<(), ParseError> {
        let idx = self.atoms.len();
        self.atoms.push(atom);
        if let Some(p) = self.prev {
            let order = self
                .pending_bond
                .take()
                .unwrap_or_else(|| self.default_bond(p, idx));
            self.add_bond(p, idx, order, self.pos)?;
        } else {
            self.pending_bond = None;
        }
        self.prev = Some(idx);
        Ok(())
    }

    fn add_bond(
        &mut self,
        a: usize,
        b: usize,
        order: BondOrder,
        offset: usize,
    ) -> Result<(), ParseError> {
        let key = (a.min(b), a.max(b));
        if self.bonded.contains(&key) {
            return Err(err(ParseErrorKind::UnmatchedRingBond, offset));
        }
        self.bonded.push(key);
        self.bonds.push(Bond { a, b, order });
        Ok(())
    }

    fn ring_closure(&mut self, number: u32, offset: usize) -> Result<(), ParseError> {
        let Some(here) = self.prev else {
            return Err(err(ParseErrorKind::UnmatchedRingBond, offset));
        };
        let pending = self.pending_bond.take();
        match self.ring_open.remove(&number) {
            Some(open) => {
                if open.atom == here {
                    return Err(err(ParseErrorKind::UnmatchedRingBond, offset));
                }
                let order = match (open.bond, pending) {
                    (Some(a), Some(b)) if a != b => {
                        return Err(err(ParseErrorKind::UnmatchedRingBond, offset))
                    }
                    (Some(a), _) => a,
                    (None, Some(b)) => b,
                    (None, None) => self.default_bond(open.atom, here),
                };
                self.add_bond(open.atom, here, order, offset)
            }
            None => {
                self.ring_open.insert(
                    number,
                    RingOpen {
                        atom: here,
                        bond: pending,
                        offset,
                    },
                );
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Element;

    #[test]
    fn single_atom() {
        let mol = parse_smiles("C").unwrap();
        assert_eq!(mol.atom_count(), 1);
        assert_eq!(mol.bond_count(), 0);
        assert_eq!(mol.atom(0).element, Element::C);
    }

    #[test]
    fn ring_closure_triangle() {
        let mol = parse_smiles("C1CC1").unwrap();
        assert_eq!(mol.atom_count(), 3);
        assert_eq!(mol.bond_count(), 3);
        assert!(mol.bonds().iter().all(|b| b.order == BondOrder::Single));
    }

    #[test]
    fn dangling_ring_bond_reports_digit_offset() {
        let e = parse_smiles("C1CC").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnmatchedRingBond);
        assert_eq!(e.offset, 1);
    }

    #[test]
    fn branch_errors() {
        let e = parse_smiles("C(CC").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnclosedBranch);
        assert_eq!(e.offset, 1);
        let e = parse_smiles("CC)C").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnclosedBranch);
        assert_eq!(e.offset, 2);
    }

    #[test]
    fn bracket_atoms() {
        let mol = parse_smiles("[NH4+]").unwrap();
        let atom = mol.atom(0);
        assert_eq!(atom.element, Element::N);
        assert_eq!(atom.formal_charge, 1);
        assert_eq!(atom.explicit_h, Some(4));

        let mol = parse_smiles("CC(=O)[O-]").unwrap();
        assert_eq!(mol.atom(3).formal_charge, -1);
        assert_eq!(mol.atom(3).explicit_h, Some(0));

        let mol = parse_smiles("[C]").unwrap();
        assert_eq!(mol.atom(0).explicit_h, Some(0));
    }

    #[test]
    fn charge_variants() {
        assert_eq!(parse_smiles("[O-2]").unwrap().atom(0).formal_charge, -2);
        assert_eq!(parse_smiles("[O--]").unwrap().atom(0).formal_charge, -2);
        assert_eq!(parse_smiles("[N+3]").unwrap().atom(0).formal_charge, 3);
        let e = parse_smiles("[N+-]").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::InvalidCharge);
    }

    #[test]
    fn unknown_symbols() {
        let e = parse_smiles("CXC").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownAtomSymbol);
        assert_eq!(e.offset, 1);
        let e = parse_smiles("C[Si](C)C").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownAtomSymbol);
    }

    #[test]
    fn aromatic_default_bonds() {
        let mol = parse_smiles("c1ccccc1").unwrap();
        assert_eq!(mol.bond_count(), 6);
        assert!(mol.bonds().iter().all(|b| b.order == BondOrder::Aromatic));
        // single bond between two aromatic atoms must be explicit
        let biphenyl = parse_smiles("c1ccccc1-c1ccccc1").unwrap();
        let single = biphenyl
            .bonds()
            .iter()
            .filter(|b| b.order == BondOrder::Single)
            .count();
        assert_eq!(single, 1);
    }

    #[test]
    fn stereo_markers_ignored_with_flag() {
        let mol = parse_smiles("F/C=C/F").unwrap();
        assert!(mol.stereo_ignored());
        assert_eq!(mol.bond_count(), 3);
        let mol = parse_smiles("[C@H3]O").unwrap();
        assert!(mol.stereo_ignored());
        assert!(!parse_smiles("CCO").unwrap().stereo_ignored());
    }

    #[test]
    fn fragment_separator() {
        let mol = parse_smiles("CC.O").unwrap();
        assert_eq!(mol.atom_count(), 3);
        assert_eq!(mol.bond_count(), 1);
        assert!(!mol.is_connected());
    }

    #[test]
    fn ring_bond_order_consistency() {
        let mol = parse_smiles("C=1CCCCC=1").unwrap();
        assert!(mol.bonds().iter().any(|b| b.order == BondOrder::Double));
        let mol = parse_smiles("C=1CCCCC1").unwrap();
        assert!(mol.bonds().iter().any(|b| b.order == BondOrder::Double));
        let e = parse_smiles("C=1CCCCC#1").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnmatchedRingBond);
    }

    #[test]
    fn empty_input_is_an_error() {
        let e = parse_smiles("").unwrap_err();
        assert_eq!(e.offset, 0);
    }
}
