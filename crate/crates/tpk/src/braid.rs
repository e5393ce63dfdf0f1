use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BraidError {
    #[error("strand count must be even for plat operations, got {0}")]
    OddStrands(usize),
    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand count must be positive")]
    ZeroStrands,
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
}

/// A word in the Artin generators of the braid group on `strands` strands.
/// Letter k > 0 is σ_k, k < 0 is σ_|k|^{-1}; strand indices are 1-based.
/// Letters are read left-to-right from the interior caps toward the bridge sphere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::ZeroStrands);
        }
        for &k in &letters {
            if k == 0 || k.unsigned_abs() as usize > strands - 1 {
                return Err(BraidError::LetterOutOfRange { letter: k, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parses the whitespace-separated signed-integer syntax; empty input is the identity.
    pub fn parse(strands: usize, text: &str) -> Result<Self, String> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let k: i32 = tok
                .parse()
                .map_err(|_| format!("bad braid letter `{tok}`"))?;
            letters.push(k);
        }
        BraidWord::new(strands, letters).map_err(|e| e.to_string())
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Reflection across the bridge sphere: reverse letter order, negate every letter.
    pub fn mirror_reverse(&self) -> BraidWord {
        let letters = self.letters.iter().rev().map(|&k| -k).collect();
        BraidWord { strands: self.strands, letters }
    }

    /// Cancels adjacent inverse pairs k, -k to fixpoint.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &k in &self.letters {
            if stack.last() == Some(&-k) {
                stack.pop();
            } else {
                stack.push(k);
            }
        }
        BraidWord { strands: self.strands, letters: stack }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{k}")?;
            first = false;
        }
        Ok(())
    }
}

/// Permutation on {1,…,n}; `images[i]` is the image of point i+1, 0-based storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (1..=n).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn inverse(&self) -> Perm {
        let n = self.images.len();
        let mut images = vec![0; n];
        for x in 1..=n {
            images[self.apply(x) - 1] = x;
        }
        Perm { images }
    }

    /// self ∘ other: other applied first.
    pub fn compose(&self, other: &Perm) -> Perm {
        let n = self.images.len();
        let images = (1..=n).map(|x| self.apply(other.apply(x))).collect();
        Perm { images }
    }

    fn swap(&mut self, k: usize) {
        self.images.swap(k - 1, k);
    }
}

/// The underlying permutation of a braid word, forgetting crossing signs.
/// σ_{k1}⋯σ_{km} acts with the rightmost letter applied first, so [1,2,3] on
/// 4 strands is the 4-cycle sending 1→2, 2→3, 3→4, 4→1.
pub fn permutation(w: &BraidWord) -> Perm {
    let mut p = Perm::identity(w.strands());
    for &k in w.letters() {
        p.swap(k.unsigned_abs() as usize);
    }
    p
}

/// Fixed-point-free involution on {1,…,2b}; pairing of tangle endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    partner: Vec<usize>,
}

impl Matching {
    pub fn from_partners(partner: Vec<usize>) -> Self {
        let n = partner.len();
        for x in 1..=n {
            let y = partner[x - 1];
            assert!(y >= 1 && y <= n && y != x && partner[y - 1] == x, "not an involution");
        }
        Matching { partner }
    }

    /// The base pattern τ0 = (1 2)(3 4)…(2b−1 2b).
    pub fn base(points: usize) -> Self {
        assert!(points % 2 == 0);
        let partner = (1..=points)
            .map(|x| if x % 2 == 1 { x + 1 } else { x - 1 })
            .collect();
        Matching { partner }
    }

    pub fn points(&self) -> usize {
        self.partner.len()
    }

    pub fn pair(&self, x: usize) -> usize {
        self.partner[x - 1]
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (1..=self.points())
            .filter(|&x| x < self.pair(x))
            .map(|x| (x, self.pair(x)))
            .collect()
    }

    /// Orbit count of the group generated by self and other acting on the points.
    pub fn joint_orbits(&self, other: &Matching) -> usize {
        assert_eq!(self.points(), other.points());
        let n = self.points();
        let mut seen = vec![false; n + 1];
        let mut orbits = 0;
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            orbits += 1;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                if seen[x] {
                    continue;
                }
                seen[x] = true;
                stack.push(self.pair(x));
                stack.push(other.pair(x));
            }
        }
        orbits
    }

    /// True iff the pairing is realizable by disjoint arcs in a half-plane
    /// (no two pairs interleave as a < c < b < d).
    pub fn is_planar(&self) -> bool {
        let ps = self.pairs();
        for (i, &(a, b)) in ps.iter().enumerate() {
            for &(c, d) in &ps[i + 1..] {
                let inside_c = a < c && c < b;
                let inside_d = a < d && d < b;
                if inside_c != inside_d {
                    return false;
                }
            }
        }
        true
    }
}

/// Boundary pairing of the plat of `w` over the base caps: τ0 conjugated by
/// the word's permutation. The geometric bottom-to-top strand map is the
/// inverse of `permutation`, so the conjugation runs through g = p⁻¹.
pub fn plat_matching(w: &BraidWord) -> Result<Matching, BraidError> {
    let n = w.strands();
    if n % 2 != 0 {
        return Err(BraidError::OddStrands(n));
    }
    let g = permutation(w).inverse();
    let ginv = g.inverse();
    let base = Matching::base(n);
    let partner = (1..=n)
        .map(|x| g.apply(base.pair(ginv.apply(x))))
        .collect();
    Ok(Matching::from_partners(partner))
}
