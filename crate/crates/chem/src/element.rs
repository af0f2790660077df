use std::fmt;

/// The supported element set: the SMILES organic subset plus bracket forms
/// of the same elements. Anything else is a parse error.
///
/// The derived `Ord` is the canonical element order used for ranking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    B,
    C,
    N,
    O,
    P,
    S,
    F,
    Cl,
    Br,
    I,
}

impl Element {
    pub fn from_symbol(sym: &str) -> Option<Element> {
        Some(match sym {
            "B" => Element::B,
            "C" => Element::C,
            "N" => Element::N,
            "O" => Element::O,
            "P" => Element::P,
            "S" => Element::S,
            "F" => Element::F,
            "Cl" => Element::Cl,
            "Br" => Element::Br,
            "I" => Element::I,
            _ => return None,
        })
    }

    /// Lowercase aromatic symbols. Halogens have no aromatic form.
    pub fn from_aromatic_symbol(sym: &str) -> Option<Element> {
        Some(match sym {
            "b" => Element::B,
            "c" => Element::C,
            "n" => Element::N,
            "o" => Element::O,
            "p" => Element::P,
            "s" => Element::S,
            _ => return None,
        })
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Element::B => "B",
            Element::C => "C",
            Element::N => "N",
            Element::O => "O",
            Element::P => "P",
            Element::S => "S",
            Element::F => "F",
            Element::Cl => "Cl",
            Element::Br => "Br",
            Element::I => "I",
        }
    }

    pub fn aromatic_symbol(&self) -> Option<&'static str> {
        Some(match self {
            Element::B => "b",
            Element::C => "c",
            Element::N => "n",
            Element::O => "o",
            Element::P => "p",
            Element::S => "s",
            _ => return None,
        })
    }

    /// Largest bond-order sum the valence table allows.
    ///
    /// Table: B=3, C=4, N=3, O=2, P=3 or 5, S=2/4/6, halogens=1. Multi-valent
    /// elements are checked against their maximum; implicit hydrogens are
    /// assumed to fill up to the nearest allowed valence. Charge does not
    /// adjust the table.
    pub fn max_valence(&self) -> u32 {
        match self {
            Element::B => 3,
            Element::C => 4,
            Element::N => 3,
            Element::O => 2,
            Element::P => 5,
            Element::S => 6,
            Element::F | Element::Cl | Element::Br | Element::I => 1,
        }
    }

    pub fn is_halogen(&self) -> bool {
        matches!(
            self,
            Element::F | Element::Cl | Element::Br | Element::I
        )
    }

    /// Stable small integer used in hashes and rank keys.
    pub fn index(&self) -> u8 {
        *self as u8
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}
