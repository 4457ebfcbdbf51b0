//! Microstates and macrostates.
//!
//! A [`BitString`] is a finite sequence of bits with its Hamming weight kept
//! alongside; a [`Macrostate`] is the coarse-grained view `(length, weight)`
//! shared by all strings of that weight. Reservoir generation lives here too:
//! independent-bit strings at a target fraction of 1s and uniform strings of
//! exact weight, both deterministic under a [`Seed`].

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::rng::Seed;

/// Errors from construction, generation, and (de)serialization.
#[derive(Debug, Clone, PartialEq)]
pub enum BitsError {
    /// Target fraction of 1s outside [0, 1].
    FractionOutOfRange(f64),
    /// Requested weight exceeds the string length.
    WeightExceedsLength { k: usize, n: usize },
    /// Strings must hold at least one bit.
    Empty,
    /// Text form may contain only '0' and '1'.
    BadChar { position: usize, byte: u8 },
    /// Packed form too short or inconsistent with its length header.
    BadPacked,
}

impl fmt::Display for BitsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BitsError::FractionOutOfRange(t) => write!(f, "fraction {t} outside [0, 1]"),
            BitsError::WeightExceedsLength { k, n } => {
                write!(f, "weight {k} exceeds length {n}")
            }
            BitsError::Empty => write!(f, "bit string must be non-empty"),
            BitsError::BadChar { position, byte } => {
                write!(f, "invalid character 0x{byte:02x} at position {position}")
            }
            BitsError::BadPacked => write!(f, "malformed packed bit string"),
        }
    }
}

impl core::error::Error for BitsError {}

/// A finite string of bits with cached length and Hamming weight.
///
/// Bits are addressed by index from 0; the bit at index 0 is the leftmost
/// character of the text form. Values are immutable after construction
/// except through [`BitString::with_flipped`], which returns a new string.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    words: Vec<u64>,
    len: usize,
    weight: usize,
}

impl BitString {
    /// Build from an iterator of bits. Panics on an empty iterator.
    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> BitString {
        let mut words = Vec::new();
        let mut len = 0usize;
        let mut weight = 0usize;
        for b in bits {
            if len.is_multiple_of(64) {
                words.push(0);
            }
            if b {
                words[len / 64] |= 1u64 << (len % 64);
                weight += 1;
            }
            len += 1;
        }
        assert!(len > 0, "bit string must be non-empty");
        BitString { words, len, weight }
    }

    /// The all-`bit` string of length `n`.
    pub fn repeated(bit: bool, n: usize) -> BitString {
        assert!(n > 0, "bit string must be non-empty");
        let mut words = alloc::vec![if bit { u64::MAX } else { 0 }; n.div_ceil(64)];
        if bit {
            // Clear tail bits beyond len so weight and comparisons stay exact.
            let tail = n % 64;
            if tail != 0 {
                *words.last_mut().unwrap() = (1u64 << tail) - 1;
            }
        }
        BitString {
            words,
            len: n,
            weight: if bit { n } else { 0 },
        }
    }

    /// 0101…: the alternating string starting with 0.
    pub fn alternating(n: usize) -> BitString {
        BitString::from_bits((0..n).map(|i| i % 2 == 1))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false // length is at least 1 by construction
    }

    /// Cached Hamming weight (number of 1s).
    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Recount the 1s from storage; equals [`BitString::weight`] always.
    pub fn recompute_weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Hamming fraction t = weight / length, exact in double precision
    /// whenever representable. For exact rational work use [`Macrostate`].
    pub fn hamming_fraction(&self) -> f64 {
        self.weight as f64 / self.len as f64
    }

    pub fn macrostate(&self) -> Macrostate {
        Macrostate {
            n: self.len,
            k: self.weight,
        }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(
            i < self.len,
            "bit index {i} out of range (len {})",
            self.len
        );
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    /// New string with the bit at `i` flipped.
    pub fn with_flipped(&self, i: usize) -> BitString {
        assert!(
            i < self.len,
            "bit index {i} out of range (len {})",
            self.len
        );
        let mut out = self.clone();
        out.words[i / 64] ^= 1u64 << (i % 64);
        if self.get(i) {
            out.weight -= 1;
        } else {
            out.weight += 1;
        }
        out
    }

    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Indices holding a 0, ascending.
    pub fn zero_positions(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| !self.get(i)).collect()
    }

    /// Concatenation self followed by other.
    pub fn concat(&self, other: &BitString) -> BitString {
        BitString::from_bits(self.iter_bits().chain(other.iter_bits()))
    }

    /// 64 bits starting at index `i`, bit `i` in the least significant
    /// position. Bits past the end read as 0; callers bound their use.
    #[inline]
    pub(crate) fn window64(&self, i: usize) -> u64 {
        let q = i / 64;
        let r = i % 64;
        let lo = self.words.get(q).copied().unwrap_or(0) >> r;
        if r == 0 {
            lo
        } else {
            lo | (self.words.get(q + 1).copied().unwrap_or(0) << (64 - r))
        }
    }

    /// Length of the longest common prefix of the suffixes at `a` and `b`,
    /// capped at `max`.
    pub(crate) fn common_prefix(&self, a: usize, b: usize, max: usize) -> usize {
        let mut matched = 0;
        while matched < max {
            let span = (max - matched).min(64);
            let wa = self.window64(a + matched);
            let wb = self.window64(b + matched);
            let diff = wa ^ wb;
            let mask = if span == 64 {
                u64::MAX
            } else {
                (1u64 << span) - 1
            };
            let d = diff & mask;
            if d == 0 {
                matched += span;
            } else {
                return matched + d.trailing_zeros() as usize;
            }
        }
        max
    }

    /// ASCII form, '0'/'1', index 0 first.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.len);
        for b in self.iter_bits() {
            s.push(if b { '1' } else { '0' });
        }
        s
    }

    pub fn from_text(text: &str) -> Result<BitString, BitsError> {
        let text = text.trim_end_matches(['\r', '\n']);
        if text.is_empty() {
            return Err(BitsError::Empty);
        }
        let mut bits = Vec::with_capacity(text.len());
        for (position, byte) in text.bytes().enumerate() {
            match byte {
                b'0' => bits.push(false),
                b'1' => bits.push(true),
                _ => return Err(BitsError::BadChar { position, byte }),
            }
        }
        Ok(BitString::from_bits(bits))
    }

    /// Packed form: 8-byte little-endian bit-length header, then the bits at
    /// 8 per byte, first bit in the most significant position of each byte,
    /// zero padding in the trailing byte.
    pub fn to_packed(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + self.len.div_ceil(8));
        out.extend_from_slice(&(self.len as u64).to_le_bytes());
        let mut byte = 0u8;
        for (i, b) in self.iter_bits().enumerate() {
            if b {
                byte |= 1 << (7 - (i % 8));
            }
            if i % 8 == 7 {
                out.push(byte);
                byte = 0;
            }
        }
        if !self.len.is_multiple_of(8) {
            out.push(byte);
        }
        out
    }

    pub fn from_packed(data: &[u8]) -> Result<BitString, BitsError> {
        if data.len() < 8 {
            return Err(BitsError::BadPacked);
        }
        let len = u64::from_le_bytes(data[..8].try_into().unwrap()) as usize;
        if len == 0 || data.len() != 8 + len.div_ceil(8) {
            return Err(BitsError::BadPacked);
        }
        let payload = &data[8..];
        Ok(BitString::from_bits(
            (0..len).map(|i| (payload[i / 8] >> (7 - (i % 8))) & 1 == 1),
        ))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl PartialOrd for BitString {
    fn partial_cmp(&self, other: &BitString) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BitString {
    /// Lexicographic order of the text form ('0' < '1', index 0 first).
    fn cmp(&self, other: &BitString) -> Ordering {
        let words = self.words.len().max(other.words.len());
        for q in 0..words {
            // reverse_bits puts index order into numeric order within a word
            let a = self.words.get(q).copied().unwrap_or(0).reverse_bits();
            let b = other.words.get(q).copied().unwrap_or(0).reverse_bits();
            match a.cmp(&b) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        self.len.cmp(&other.len)
    }
}

/// Thermodynamic coarse-graining of a string: length and Hamming weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Macrostate {
    n: usize,
    k: usize,
}

impl Macrostate {
    pub fn new(n: usize, k: usize) -> Result<Macrostate, BitsError> {
        if n == 0 {
            return Err(BitsError::Empty);
        }
        if k > n {
            return Err(BitsError::WeightExceedsLength { k, n });
        }
        Ok(Macrostate { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// t = k/n in [0, 1].
    pub fn hamming_fraction(&self) -> f64 {
        self.k as f64 / self.n as f64
    }
}

/// String with each bit independently 1 with probability `t`.
///
/// Realizes a random heat reservoir at fraction `t`; identical seed and
/// parameters reproduce the identical string.
pub fn generate_bernoulli(n: usize, t: f64, seed: Seed) -> Result<BitString, BitsError> {
    if !(0.0..=1.0).contains(&t) {
        return Err(BitsError::FractionOutOfRange(t));
    }
    if n == 0 {
        return Err(BitsError::Empty);
    }
    let mut rng = seed.rng();
    Ok(BitString::from_bits((0..n).map(|_| rng.chance(t))))
}

/// Uniformly random string among the C(n, k) strings of weight exactly `k`.
///
/// Sequential sampling: position i is a 1 with probability
/// (remaining 1s) / (remaining positions), which is uniform over the support.
pub fn generate_exact(n: usize, k: usize, seed: Seed) -> Result<BitString, BitsError> {
    if n == 0 {
        return Err(BitsError::Empty);
    }
    if k > n {
        return Err(BitsError::WeightExceedsLength { k, n });
    }
    let mut rng = seed.rng();
    let mut remaining_ones = k;
    Ok(BitString::from_bits((0..n).map(|i| {
        let remaining_positions = (n - i) as u64;
        let one = (rng.below(remaining_positions) as usize) < remaining_ones;
        if one {
            remaining_ones -= 1;
        }
        one
    })))
}
