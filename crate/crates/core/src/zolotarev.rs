//! Multiplication permutations of `Z/mZ`, cycle structure and signature.

use crate::error::{Error, Result};
use crate::modring::{gcd_raw, mul_raw, Modulus};
use crate::multfunc::{jacobi, Sign};

/// Bijection on `{0, ..., m-1}` stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

/// Disjoint cycles, each starting at its minimum, sorted by minimum.
/// Fixed points appear as 1-cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleDecomposition {
    cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn count(&self) -> usize {
        self.cycles.len()
    }

    /// Cycle lengths in canonical cycle order.
    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    /// `(length, multiplicity)` pairs sorted by length.
    pub fn length_multiset(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for c in &self.cycles {
            *counts.entry(c.len()).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation { image: (0..m).collect() }
    }

    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &y in &image {
            if y >= image.len() || seen[y] {
                return Err(Error::Parse(format!("not a bijection: image {y} repeated or out of range")));
            }
            seen[y] = true;
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(Error::ShapeMismatch {
                expected: self.len(),
                got: format!("permutation on {} points", other.len()),
            });
        }
        Ok(Permutation { image: other.image.iter().map(|&x| self.image[x]).collect() })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { image: inv }
    }

    pub fn cycles(&self) -> CycleDecomposition {
        let mut visited = vec![false; self.len()];
        let mut cycles = Vec::new();
        // scanning starts in increasing order, so each cycle begins at its minimum
        for start in 0..self.len() {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                cycle.push(x);
                x = self.image[x];
            }
            cycles.push(cycle);
        }
        CycleDecomposition { cycles }
    }

    pub fn cycle_count(&self) -> usize {
        let mut visited = vec![false; self.len()];
        let mut count = 0;
        for start in 0..self.len() {
            if visited[start] {
                continue;
            }
            count += 1;
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                x = self.image[x];
            }
        }
        count
    }

    /// `(-1)^(points - cycles)`.
    pub fn signature(&self) -> Sign {
        Sign::parity((self.len() - self.cycle_count()) as u64)
    }
}

/// `x -> a x mod m`; requires `gcd(a, m) = 1`.
pub fn mult_perm(a: i64, m: u64) -> Result<Permutation> {
    let modulus = Modulus::new(m)?;
    let a_red = modulus.reduce(a as i128).value();
    if gcd_raw(a_red, m) != 1 {
        return Err(Error::NotCoprime { a, m });
    }
    let image = (0..m).map(|x| mul_raw(a_red, x, modulus) as usize).collect();
    Ok(Permutation { image })
}

pub fn cycles(p: &Permutation) -> CycleDecomposition {
    p.cycles()
}

pub fn signature(p: &Permutation) -> Sign {
    p.signature()
}

/// `(a/m) == sgn(x -> a x)` for odd `m >= 3` and `gcd(a, m) = 1`.
pub fn check_zolotarev(a: i64, m: u64) -> Result<bool> {
    let symbol = jacobi(a, m)?;
    let p = mult_perm(a, m)?;
    Ok(symbol == p.signature())
}

fn require_even(n: usize) -> Result<()> {
    match n {
        0 => Err(Error::ZeroSide),
        n if n % 2 == 1 => Err(Error::OddSide(n)),
        _ => Ok(()),
    }
}

/// Multiplication by `n` on `Z/(n^2+1)Z` fixes `0` and splits the rest into
/// `n^2 / 4` four-cycles, and no nonzero point has period below four.
pub fn check_cycle_structure(n: usize) -> Result<bool> {
    require_even(n)?;
    let modulus = Modulus::for_side(n)?;
    let m = modulus.get();
    let f = mult_perm(n as i64, m)?;
    let dec = f.cycles();
    let fixed: Vec<&Vec<usize>> = dec.cycles().iter().filter(|c| c.len() == 1).collect();
    let fours = dec.cycles().iter().filter(|c| c.len() == 4).count();
    let others = dec.count() - fixed.len() - fours;
    if fixed.len() != 1 || fixed[0][0] != 0 || others != 0 || fours != n * n / 4 {
        return Ok(false);
    }
    let periods_ok = (1..m as usize).all(|a| {
        let mut x = a;
        for k in 1..=4 {
            x = f.apply(x);
            if (x == a) != (k == 4) {
                return false;
            }
        }
        true
    });
    Ok(periods_ok)
}

/// `(n / n^2+1) = (-1)^(n^2/4)` for even `n`, plus `n^2/4` odd iff `n = 2 (mod 4)`.
pub fn check_lemma(n: usize) -> Result<bool> {
    require_even(n)?;
    let m = Modulus::for_side(n)?.get();
    let quarter = (n as u64 * n as u64) / 4;
    let expected = Sign::parity(quarter);
    let parity_law = (quarter % 2 == 1) == (n % 4 == 2);
    Ok(parity_law && jacobi(n as i64, m)? == expected)
}
