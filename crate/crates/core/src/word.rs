//! Alphabets and words over them.
//!
//! A [`Word`] stores letter ranks rather than raw bytes. The [`Alphabet`]
//! maps ranks back to bytes and is either inferred from the input (sorted
//! distinct bytes) or supplied explicitly.

use std::fmt;

use crate::error::{Error, Result};

/// An ordered alphabet of distinct raw byte values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<u8>,
    // rank of each byte, or u16::MAX when absent
    ranks: Box<[u16; 256]>,
}

impl Alphabet {
    /// Builds an alphabet from arbitrary symbols; duplicates are rejected and
    /// the symbols are sorted ascending.
    pub fn new(symbols: &[u8]) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must not be empty".into()));
        }
        let mut sorted = symbols.to_vec();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidAlphabet(format!(
                "duplicate symbol {:#04x}",
                w[0]
            )));
        }
        Ok(Self::from_sorted(sorted))
    }

    /// The sorted distinct bytes of `bytes`. Fails on empty input.
    pub fn infer(bytes: &[u8]) -> Result<Self> {
        let mut seen = [false; 256];
        for &b in bytes {
            seen[b as usize] = true;
        }
        let symbols: Vec<u8> = (0..=255u8).filter(|&b| seen[b as usize]).collect();
        if symbols.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self::from_sorted(symbols))
    }

    /// The first `sigma` lowercase letters for `sigma <= 26`, otherwise the
    /// byte values `0..sigma`.
    pub fn standard(sigma: usize) -> Result<Self> {
        match sigma {
            0 | 257.. => Err(Error::InvalidAlphabet(format!(
                "size {sigma} outside 1..=256"
            ))),
            1..=26 => Ok(Self::from_sorted((b'a'..b'a' + sigma as u8).collect())),
            _ => Ok(Self::from_sorted((0..sigma).map(|b| b as u8).collect())),
        }
    }

    fn from_sorted(symbols: Vec<u8>) -> Self {
        let mut ranks = Box::new([u16::MAX; 256]);
        for (rank, &b) in symbols.iter().enumerate() {
            ranks[b as usize] = rank as u16;
        }
        Self { symbols, ranks }
    }

    pub fn size(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn rank(&self, byte: u8) -> Option<u8> {
        match self.ranks[byte as usize] {
            u16::MAX => None,
            r => Some(r as u8),
        }
    }

    pub fn symbol(&self, rank: u8) -> Option<u8> {
        self.symbols.get(rank as usize).copied()
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Alphabet")
            .field(&String::from_utf8_lossy(&self.symbols))
            .finish()
    }
}

/// A word as a sequence of letter ranks in `[0, sigma)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    codes: Vec<u8>,
    sigma: usize,
}

impl Word {
    /// Encodes `bytes` over the alphabet inferred from them.
    pub fn from_bytes(bytes: &[u8]) -> Result<(Self, Alphabet)> {
        let alphabet = Alphabet::infer(bytes)?;
        let word = Self::with_alphabet(bytes, &alphabet)?;
        Ok((word, alphabet))
    }

    /// Encodes `bytes` over an explicit alphabet.
    pub fn with_alphabet(bytes: &[u8], alphabet: &Alphabet) -> Result<Self> {
        let codes = bytes
            .iter()
            .enumerate()
            .map(|(position, &byte)| {
                alphabet
                    .rank(byte)
                    .ok_or(Error::ForeignByte { byte, position })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            codes,
            sigma: alphabet.size(),
        })
    }

    pub fn from_codes(codes: Vec<u8>, sigma: usize) -> Result<Self> {
        if sigma == 0 || sigma > 256 {
            return Err(Error::InvalidAlphabet(format!(
                "size {sigma} outside 1..=256"
            )));
        }
        if let Some((position, &code)) = codes
            .iter()
            .enumerate()
            .find(|(_, &c)| c as usize >= sigma)
        {
            return Err(Error::CodeOutOfRange {
                code,
                position,
                sigma,
            });
        }
        Ok(Self { codes, sigma })
    }

    pub fn codes(&self) -> &[u8] {
        &self.codes
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// Size of the alphabet the word is written over (not the number of
    /// letters that actually occur).
    pub fn sigma(&self) -> usize {
        self.sigma
    }

    /// Decodes back to raw bytes. `alphabet` must have the word's size.
    pub fn to_bytes(&self, alphabet: &Alphabet) -> Result<Vec<u8>> {
        if alphabet.size() != self.sigma {
            return Err(Error::DimensionMismatch {
                left: alphabet.size(),
                right: self.sigma,
            });
        }
        Ok(self.codes.iter().map(|&c| alphabet.symbols[c as usize]).collect())
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyWord)
        } else {
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inferred_alphabet_is_sorted_and_distinct() {
        let a = Alphabet::infer(b"cabbac").unwrap();
        assert_eq!(a.symbols(), b"abc");
        assert_eq!(a.rank(b'c'), Some(2));
        assert_eq!(a.rank(b'z'), None);
    }

    #[test]
    fn explicit_alphabet_rejects_duplicates() {
        assert!(matches!(
            Alphabet::new(b"aba"),
            Err(Error::InvalidAlphabet(_))
        ));
        assert_eq!(Alphabet::new(b"cba").unwrap().symbols(), b"abc");
    }

    #[test]
    fn foreign_byte_is_reported_with_position() {
        let a = Alphabet::new(b"ab").unwrap();
        match Word::with_alphabet(b"abxa", &a) {
            Err(Error::ForeignByte { byte, position }) => {
                assert_eq!((byte, position), (b'x', 2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn codes_out_of_range_are_rejected() {
        assert!(Word::from_codes(vec![0, 1, 2], 2).is_err());
        assert!(Word::from_codes(vec![], 0).is_err());
        assert!(Word::from_codes(vec![], 3).unwrap().is_empty());
    }

    #[test]
    fn bytes_round_trip() {
        let (w, a) = Word::from_bytes(b"GATTACA").unwrap();
        assert_eq!(w.sigma(), 4);
        assert_eq!(w.to_bytes(&a).unwrap(), b"GATTACA");
    }

    #[test]
    fn standard_alphabets() {
        assert_eq!(Alphabet::standard(3).unwrap().symbols(), b"abc");
        assert_eq!(Alphabet::standard(256).unwrap().size(), 256);
        assert!(Alphabet::standard(0).is_err());
        assert!(Alphabet::standard(257).is_err());
    }
}
