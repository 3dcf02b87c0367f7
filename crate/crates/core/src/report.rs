//! Human-readable period report for a single input.

use std::fmt;

use crate::bench::Algorithm;
use crate::error::{Error, Result};
use crate::qlfap::{analyze, PeriodSet};
use crate::scaled::irreducible_factorization;
use crate::word::Word;

#[derive(Clone, Debug)]
pub struct PeriodsReport {
    pub n: usize,
    pub sigma: usize,
    pub g: usize,
    pub s: usize,
    pub threshold: usize,
    pub periods: PeriodSet,
    /// `L` as a 0/1 string and the irreducible scaled factors, when requested.
    pub profile: Option<ProfileDump>,
}

#[derive(Clone, Debug)]
pub struct ProfileDump {
    pub marks: String,
    pub factor_lengths: Vec<usize>,
    pub factors: Vec<String>,
}

/// Analyzes `bytes` (alphabet inferred) with every algorithm in
/// `algorithms`, which must all agree.
pub fn periods_report(bytes: &[u8], algorithms: &[Algorithm], dump_profile: bool) -> Result<PeriodsReport> {
    let (word, alphabet) = Word::from_bytes(bytes)?;
    let analysis = analyze(&word)?;

    let mut results = Vec::with_capacity(algorithms.len());
    for &a in algorithms {
        results.push((a, a.run(&word)?));
    }
    let (_, periods) = results
        .first()
        .cloned()
        .ok_or_else(|| Error::Precondition("no algorithm selected".into()))?;
    if results.iter().any(|(_, p)| *p != periods) {
        let detail = results
            .iter()
            .map(|(a, p)| format!("{a}={{{p}}}"))
            .collect::<Vec<_>>()
            .join(" ");
        return Err(Error::ChecksumDivergence {
            sigma: alphabet.size(),
            n: word.len(),
            trial: 0,
            seed: 0,
            detail,
        });
    }

    let profile = dump_profile.then(|| {
        let lengths = irreducible_factorization(&analysis.profile);
        let mut start = 0;
        let factors = lengths
            .iter()
            .map(|&len| {
                let f = String::from_utf8_lossy(&bytes[start..start + len]).into_owned();
                start += len;
                f
            })
            .collect();
        ProfileDump {
            marks: analysis.profile.marks_string(),
            factor_lengths: lengths,
            factors,
        }
    });

    Ok(PeriodsReport {
        n: analysis.n,
        sigma: alphabet.size(),
        g: analysis.g,
        s: analysis.s,
        threshold: analysis.threshold(),
        periods,
        profile,
    })
}

impl fmt::Display for PeriodsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n={} sigma={} g={} s={} T={} periods={}",
            self.n, self.sigma, self.g, self.s, self.threshold, self.periods
        )?;
        if let Some(p) = &self.profile {
            writeln!(f, "L={}", p.marks)?;
            let lengths: Vec<String> = p.factor_lengths.iter().map(|l| l.to_string()).collect();
            writeln!(f, "factor_lengths={}", lengths.join(","))?;
            writeln!(f, "factors={}", p.factors.join("\u{b7}"))?;
        }
        Ok(())
    }
}
