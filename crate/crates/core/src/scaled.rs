//! Scaled factorization.
//!
//! Let `g` be the gcd of the letter counts of `w` and `s = n / g`. A factor
//! is *scaled* when its Parikh vector is an integer multiple of `P_w / g`,
//! the Parikh vector every block of the smallest possible period must have.
//! Every word splits uniquely into irreducible scaled factors (scaled
//! factors with no proper scaled prefix). [`compute_l`] finds them in a
//! single left-to-right pass and marks where each one starts.

use crate::error::{Error, Result};
use crate::parikh::{gcd_of_vector, ParikhVector};
use crate::word::Word;

/// Start positions of the irreducible scaled factors of a word, together
/// with the length (in `s`-blocks) of the longest one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledProfile {
    marks: Vec<bool>,
    threshold: usize,
    block: usize,
}

impl ScaledProfile {
    /// `L[i]`: true iff `i` starts a scaled suffix (equivalently, the prefix
    /// of length `i` is scaled).
    pub fn marks(&self) -> &[bool] {
        &self.marks
    }

    pub fn is_marked(&self, i: usize) -> bool {
        self.marks[i]
    }

    /// `T`: block count of the longest irreducible scaled factor.
    pub fn threshold(&self) -> usize {
        self.threshold
    }

    /// `s = n / g`, the smallest candidate period.
    pub fn block(&self) -> usize {
        self.block
    }

    pub fn len(&self) -> usize {
        self.marks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.marks.is_empty()
    }

    /// Profile of a word whose letter counts are coprime: the whole word is
    /// the only scaled factor.
    pub(crate) fn whole(n: usize) -> Self {
        let mut marks = vec![false; n];
        if n > 0 {
            marks[0] = true;
        }
        Self {
            marks,
            threshold: 1,
            block: n,
        }
    }

    /// Lengths of the irreducible scaled factors, left to right.
    pub fn factor_lengths(&self) -> Vec<usize> {
        irreducible_factorization(self)
    }

    /// Renders the marks as a string of `0`/`1`.
    pub fn marks_string(&self) -> String {
        self.marks.iter().map(|&m| if m { '1' } else { '0' }).collect()
    }
}

/// Work done by one [`compute_l`] pass: text positions consumed plus
/// per-letter block tests evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanCounter {
    pub positions: usize,
    pub letter_tests: usize,
}

impl ScanCounter {
    pub fn total(&self) -> usize {
        self.positions + self.letter_tests
    }
}

/// Computes the scaled profile of `w` given its Parikh vector `pw`, its gcd
/// `g > 1` and `s = n / g`.
pub fn compute_l(w: &Word, s: usize, g: usize, pw: &ParikhVector) -> Result<ScaledProfile> {
    compute_l_counted(w, s, g, pw).map(|(profile, _)| profile)
}

/// [`compute_l`] with an instruction counter.
pub fn compute_l_counted(
    w: &Word,
    s: usize,
    g: usize,
    pw: &ParikhVector,
) -> Result<(ScaledProfile, ScanCounter)> {
    let n = w.len();
    if g <= 1 {
        return Err(Error::Precondition(format!("gcd must exceed 1, got {g}")));
    }
    if s == 0 || g.checked_mul(s) != Some(n) {
        return Err(Error::Precondition(format!("g*s = {g}*{s} != n = {n}")));
    }
    if pw.sigma() != w.sigma() || pw.norm() != n as u64 {
        return Err(Error::Precondition(
            "Parikh vector does not belong to the word".into(),
        ));
    }
    if gcd_of_vector(pw)? != g as u64 {
        return Err(Error::Precondition(format!("{g} is not the gcd of the Parikh vector")));
    }

    // letters that occur, with their per-block quota P_w[j] / g
    let quota: Vec<(usize, u64)> = pw
        .counts()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(j, &c)| (j, c / g as u64))
        .collect();

    let codes = w.codes();
    let mut count = vec![0u64; w.sigma()];
    let mut marks = vec![false; n];
    let mut threshold = 0;
    let mut counter = ScanCounter::default();
    let mut i = 0;

    while i + s <= n {
        let start = i;
        let mut t = 0u64;
        for &(j, _) in &quota {
            count[j] = 0;
        }
        loop {
            if i + s > n {
                return Err(Error::Precondition(format!(
                    "scaled factor starting at {start} runs past the end of the word"
                )));
            }
            t += 1;
            for &c in &codes[i..i + s] {
                count[c as usize] += 1;
            }
            i += s;
            counter.positions += s;

            let mut scaled = true;
            for &(j, q) in &quota {
                counter.letter_tests += 1;
                if count[j] / t != q {
                    scaled = false;
                    break;
                }
            }
            if scaled {
                break;
            }
        }
        marks[start] = true;
        threshold = threshold.max(t as usize);
    }

    if i != n {
        return Err(Error::Precondition(format!(
            "factorization stopped at {i} of {n}"
        )));
    }

    Ok((
        ScaledProfile {
            marks,
            threshold,
            block: s,
        },
        counter,
    ))
}

/// Lengths of the irreducible scaled factors described by `profile`.
pub fn irreducible_factorization(profile: &ScaledProfile) -> Vec<usize> {
    let n = profile.len();
    let mut starts = profile
        .marks
        .iter()
        .enumerate()
        .filter(|(_, &m)| m)
        .map(|(i, _)| i)
        .chain(std::iter::once(n));
    let mut prev = match starts.next() {
        Some(p) => p,
        None => return Vec::new(),
    };
    starts
        .map(|next| {
            let len = next - prev;
            prev = next;
            len
        })
        .filter(|&len| len > 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parikh::parikh_vector;

    const EXAMPLE_WORD: &[u8] = b"abaababbbabaabbabbaaabbababbaa";

    fn profile_of(bytes: &[u8]) -> ScaledProfile {
        let (w, _) = Word::from_bytes(bytes).unwrap();
        let pw = parikh_vector(&w);
        let g = pw.gcd().unwrap() as usize;
        compute_l(&w, w.len() / g, g, &pw).unwrap()
    }

    fn bits(s: &str) -> Vec<bool> {
        s.split(',').map(|b| b.trim() == "1").collect()
    }

    #[test]
    fn worked_example_profile() {
        let p = profile_of(EXAMPLE_WORD);
        assert_eq!(
            p.marks(),
            &bits("1,0,1,0,0,0,0,0,1,0,1,0,1,0,1,0,1,0,0,0,1,0,1,0,1,0,1,0,0,0")[..]
        );
        assert_eq!(p.threshold(), 3);
        assert_eq!(p.block(), 2);
        assert_eq!(irreducible_factorization(&p), vec![2, 6, 2, 2, 2, 2, 4, 2, 2, 2, 4]);
    }

    #[test]
    fn small_examples() {
        let p = profile_of(b"abab");
        assert_eq!(p.marks(), &bits("1,0,1,0")[..]);
        assert_eq!(p.threshold(), 1);
        assert_eq!(irreducible_factorization(&p), vec![2, 2]);

        let p = profile_of(b"aabb");
        assert_eq!(p.marks(), &bits("1,0,0,0")[..]);
        assert_eq!(p.threshold(), 2);
        assert_eq!(irreducible_factorization(&p), vec![4]);
    }

    #[test]
    fn unary_word_marks_every_position() {
        let p = profile_of(b"aaaa");
        assert!(p.marks().iter().all(|&m| m));
        assert_eq!(p.threshold(), 1);
    }

    #[test]
    fn absent_declared_letters_are_ignored() {
        let a = crate::word::Alphabet::new(b"abcz").unwrap();
        let w = Word::with_alphabet(b"aabbab", &a).unwrap();
        let pw = parikh_vector(&w);
        assert_eq!(pw.counts(), &[3, 3, 0, 0]);
        let p = compute_l(&w, 2, 3, &pw).unwrap();
        assert_eq!(p.marks(), &[true, false, false, false, true, false]);
        assert_eq!(p.threshold(), 2);
    }

    #[test]
    fn rejects_violated_preconditions() {
        let (w, _) = Word::from_bytes(b"abab").unwrap();
        let pw = parikh_vector(&w);
        assert!(compute_l(&w, 4, 1, &pw).is_err());
        assert!(compute_l(&w, 1, 2, &pw).is_err());
        assert!(compute_l(&w, 2, 2, &ParikhVector::from_counts(vec![3, 1])).is_err());
        assert!(compute_l(&w, 2, 2, &ParikhVector::from_counts(vec![4, 0])).is_err());
    }

    #[test]
    fn whole_profile_for_coprime_counts() {
        let p = ScaledProfile::whole(5);
        assert_eq!(irreducible_factorization(&p), vec![5]);
        assert_eq!(p.marks_string(), "10000");
    }

    /// Direct definition: the prefix of length `i` is scaled iff its counts
    /// are proportional to the whole word's counts.
    fn prefix_is_scaled(codes: &[u8], sigma: usize, i: usize) -> bool {
        let n = codes.len() as u64;
        let whole = ParikhVector::of_codes(codes, sigma);
        let prefix = ParikhVector::of_codes(&codes[..i], sigma);
        prefix
            .counts()
            .iter()
            .zip(whole.counts())
            .all(|(&c, &total)| c * n == total * i as u64)
    }

    #[test]
    fn marks_match_definition_on_all_binary_words_up_to_14() {
        for n in 1..=14usize {
            for mask in 0u32..(1 << n) {
                let codes: Vec<u8> = (0..n).map(|k| ((mask >> k) & 1) as u8).collect();
                let w = Word::from_codes(codes.clone(), 2).unwrap();
                let pw = parikh_vector(&w);
                let g = pw.gcd().unwrap() as usize;
                if g == 1 {
                    continue;
                }
                let (p, counter) = compute_l_counted(&w, n / g, g, &pw).unwrap();
                for i in 0..n {
                    assert_eq!(
                        p.is_marked(i),
                        prefix_is_scaled(&codes, 2, i),
                        "word {codes:?} position {i}"
                    );
                }
                let factors = irreducible_factorization(&p);
                assert_eq!(factors.iter().sum::<usize>(), n);
                assert_eq!(factors.iter().max().unwrap() / p.block(), p.threshold());
                assert!(p.threshold() >= 1 && p.threshold() <= g);
                assert_eq!(counter.positions, n);
                assert!(counter.total() <= 3 * n);
            }
        }
    }
}
