//! Primes, coprime selection in short intervals and coprime bijections.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Inputs above this bound are rejected.
pub const MAX_INPUT: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberTheoryError {
    #[error("interval must start at 1 or later and have positive length (start {start}, length {length})")]
    EmptyInterval { start: u64, length: u64 },
    #[error("value {0} exceeds the supported bound 2^32")]
    TooLarge(u64),
    #[error("domain size {domain} does not match interval length {length}")]
    LengthMismatch { domain: u64, length: u64 },
    #[error("no coprime perfect matching from 1..={n} onto {start}..{end}")]
    NoCoprimeMatching { n: u64, start: u64, end: u64 },
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Primes `<= limit`, ascending.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut primes = Vec::new();
    for p in 2..=limit {
        if composite[p] {
            continue;
        }
        primes.push(p as u64);
        let mut m = p * p;
        while m <= limit {
            composite[m] = true;
            m += p;
        }
    }
    primes
}

/// Number of primes `<= x`.
pub fn prime_pi(x: u64) -> usize {
    sieve_primes(x).len()
}

/// The run of consecutive integers `start, start + 1, ..., start + length - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    start: u64,
    length: u64,
}

impl Interval {
    pub fn new(start: u64, length: u64) -> Result<Self, NumberTheoryError> {
        if start == 0 || length == 0 {
            return Err(NumberTheoryError::EmptyInterval { start, length });
        }
        let last = start + length - 1;
        if last > MAX_INPUT {
            return Err(NumberTheoryError::TooLarge(last));
        }
        Ok(Interval { start, length })
    }

    pub fn start(&self) -> u64 {
        self.start
    }

    pub fn len(&self) -> u64 {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// One past the last member.
    pub fn end(&self) -> u64 {
        self.start + self.length
    }

    pub fn members(&self) -> std::ops::Range<u64> {
        self.start..self.end()
    }
}

/// Smallest member coprime to every other member, if any. Pillai's theorem
/// guarantees one exists whenever the length is at most 16.
pub fn pillai_select(iv: &Interval) -> Option<u64> {
    iv.members()
        .find(|&x| iv.members().all(|y| y == x || gcd(x, y) == 1))
}

/// A bijection `f: {1..n} -> iv` with `gcd(i, f(i)) = 1` for every `i`,
/// returned as `f(i) = result[i - 1]`.
///
/// Built as a perfect matching in the bipartite coprimality graph using
/// augmenting paths; domain elements are processed in ascending order and
/// candidates tried in ascending order, so the output is reproducible. A
/// perfect matching always exists, so failure is reported as an error
/// rather than an absent value.
pub fn coprime_bijection(n: u64, iv: &Interval) -> Result<Vec<u64>, NumberTheoryError> {
    if iv.len() != n {
        return Err(NumberTheoryError::LengthMismatch {
            domain: n,
            length: iv.len(),
        });
    }
    let size = n as usize;
    let adjacency: Vec<Vec<usize>> = (1..=n)
        .map(|i| {
            iv.members()
                .enumerate()
                .filter(|&(_, y)| gcd(i, y) == 1)
                .map(|(j, _)| j)
                .collect()
        })
        .collect();

    let mut owner: Vec<Option<usize>> = vec![None; size];
    for i in 0..size {
        let mut visited = vec![false; size];
        if !augment(i, &adjacency, &mut owner, &mut visited) {
            return Err(NumberTheoryError::NoCoprimeMatching {
                n,
                start: iv.start(),
                end: iv.end(),
            });
        }
    }
    let mut image = vec![0; size];
    for (j, o) in owner.iter().enumerate() {
        image[o.expect("perfect matching covers the interval")] = iv.start() + j as u64;
    }
    Ok(image)
}

fn augment(
    i: usize,
    adjacency: &[Vec<usize>],
    owner: &mut [Option<usize>],
    visited: &mut [bool],
) -> bool {
    for &j in &adjacency[i] {
        if visited[j] {
            continue;
        }
        visited[j] = true;
        if owner[j].is_none_or(|k| augment(k, adjacency, owner, visited)) {
            owner[j] = Some(i);
            return true;
        }
    }
    false
}
