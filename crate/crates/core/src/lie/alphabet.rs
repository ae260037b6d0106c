//! Graded ordered alphabets, words and Lyndon words.

use std::fmt;

use crate::error::LieError;

/// A word as a sequence of letter indices; letter order is index order.
pub type Word = Vec<u8>;

/// Letters with a ℤ/2 parity and an auxiliary ℤ/2 weight. The commutation
/// sign of homogeneous `x`, `y` is `(-1)^(|x||y| + e(x)e(y))` where `|·|` is
/// parity and `e` weight. Plain superalgebras have all weights 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedAlphabet {
    names: Vec<char>,
    parity: Vec<u8>,
    weight: Vec<u8>,
}

impl GradedAlphabet {
    /// `(name, odd)` pairs in increasing letter order.
    pub fn new(letters: &[(char, bool)]) -> Result<Self, LieError> {
        let weighted: Vec<(char, bool, bool)> = letters.iter().map(|&(c, o)| (c, o, false)).collect();
        Self::with_weights(&weighted)
    }

    /// `(name, odd, weighted)` triples in increasing letter order.
    pub fn with_weights(letters: &[(char, bool, bool)]) -> Result<Self, LieError> {
        if letters.is_empty() || letters.len() > 26 {
            return Err(LieError::BadAlphabet("need between 1 and 26 letters".into()));
        }
        let names: Vec<char> = letters.iter().map(|l| l.0).collect();
        for (i, c) in names.iter().enumerate() {
            if names[..i].contains(c) || !c.is_alphabetic() {
                return Err(LieError::BadAlphabet(format!("letter '{c}' repeated or not alphabetic")));
            }
        }
        Ok(GradedAlphabet {
            names,
            parity: letters.iter().map(|l| l.1 as u8).collect(),
            weight: letters.iter().map(|l| l.2 as u8).collect(),
        })
    }

    /// Parses `a:odd,b:even`.
    pub fn parse(s: &str) -> Result<Self, LieError> {
        let mut letters = Vec::new();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (name, par) = item
                .split_once(':')
                .ok_or_else(|| LieError::BadAlphabet(format!("'{item}' is not name:odd|even")))?;
            let mut chars = name.trim().chars();
            let c = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => return Err(LieError::BadAlphabet(format!("letter name '{name}' must be one character"))),
            };
            let odd = match par.trim() {
                "odd" | "1" => true,
                "even" | "0" => false,
                other => return Err(LieError::BadAlphabet(format!("parity '{other}' is not odd|even"))),
            };
            letters.push((c, odd));
        }
        Self::new(&letters)
    }

    /// `n` odd letters `a, b, c, …`.
    pub fn odd_letters(n: usize) -> Self {
        let letters: Vec<(char, bool)> = (0..n).map(|i| ((b'a' + i as u8) as char, true)).collect();
        Self::new(&letters).expect("at most 26 letters")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, letter: u8) -> char {
        self.names[letter as usize]
    }

    pub fn letter(&self, c: char) -> Result<u8, LieError> {
        self.names
            .iter()
            .position(|&x| x == c)
            .map(|i| i as u8)
            .ok_or(LieError::UnknownLetter(c))
    }

    pub fn is_odd(&self, letter: u8) -> bool {
        self.parity[letter as usize] == 1
    }

    pub fn is_weighted(&self, letter: u8) -> bool {
        self.weight[letter as usize] == 1
    }

    /// (parity, weight) of a word.
    pub fn bidegree(&self, w: &[u8]) -> (u8, u8) {
        w.iter().fold((0, 0), |(p, e), &l| {
            (p ^ self.parity[l as usize], e ^ self.weight[l as usize])
        })
    }

    pub fn bidegree_of_multidegree(&self, md: &[u32]) -> (u8, u8) {
        md.iter().enumerate().fold((0, 0), |(p, e), (i, &k)| {
            let k = (k % 2) as u8;
            (p ^ (k & self.parity[i]), e ^ (k & self.weight[i]))
        })
    }

    /// `(-1)^(p1 p2 + e1 e2)` as ±1.
    pub fn sign(&self, x: (u8, u8), y: (u8, u8)) -> i64 {
        if (x.0 & y.0) ^ (x.1 & y.1) == 1 {
            -1
        } else {
            1
        }
    }

    /// Whether `[x, x]` can be nonzero for `x` of this bidegree.
    pub fn squares_survive(&self, b: (u8, u8)) -> bool {
        self.sign(b, b) == -1
    }

    pub fn multidegree(&self, w: &[u8]) -> Vec<u32> {
        let mut md = vec![0; self.len()];
        for &l in w {
            md[l as usize] += 1;
        }
        md
    }

    pub fn parse_word(&self, s: &str) -> Result<Word, LieError> {
        s.chars().map(|c| self.letter(c)).collect()
    }

    pub fn show(&self, w: &[u8]) -> String {
        w.iter().map(|&l| self.name(l)).collect()
    }
}

impl fmt::Display for GradedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            if i > 0 {
                f.write_str(",")?;
            }
            let par = if self.parity[i] == 1 { "odd" } else { "even" };
            write!(f, "{}:{par}", self.names[i])?;
        }
        Ok(())
    }
}

/// Strictly smaller than each proper rotation.
pub fn is_lyndon(w: &[u8]) -> bool {
    if w.is_empty() {
        return false;
    }
    let n = w.len();
    (1..n).all(|i| {
        let rotated = w[i..].iter().chain(&w[..i]);
        w.iter().lt(rotated)
    })
}

/// `(u, v)` with `v` the smallest proper suffix; both Lyndon when `w` is.
pub fn standard_factorization(w: &[u8]) -> Option<(&[u8], &[u8])> {
    if w.len() < 2 || !is_lyndon(w) {
        return None;
    }
    let split = (1..w.len()).min_by(|&i, &j| w[i..].cmp(&w[j..]))?;
    Some((&w[..split], &w[split..]))
}

/// Lyndon words over `k` letters of length at most `n`, in lexicographic
/// order (Duval's successor rule).
pub fn lyndon_words_up_to(k: u8, n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if k == 0 || n == 0 {
        return out;
    }
    let mut w: Word = vec![0];
    loop {
        out.push(w.clone());
        let m = w.len();
        while w.len() < n {
            let c = w[w.len() - m];
            w.push(c);
        }
        while w.last() == Some(&(k - 1)) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(last) => *last += 1,
        }
    }
    out
}

/// Lyndon words with the given letter counts, in lexicographic order.
pub fn lyndon_words(alpha: &GradedAlphabet, multidegree: &[u32]) -> Vec<Word> {
    let used: Vec<u8> = (0..alpha.len() as u8).filter(|&i| multidegree.get(i as usize).copied().unwrap_or(0) > 0).collect();
    let n: u32 = multidegree.iter().sum();
    if used.is_empty() {
        return Vec::new();
    }
    if used.len() == 1 {
        return if n == 1 { vec![vec![used[0]]] } else { Vec::new() };
    }
    let target: Vec<u32> = used.iter().map(|&l| multidegree[l as usize]).collect();
    lyndon_words_up_to(used.len() as u8, n as usize)
        .into_iter()
        .filter(|w| w.len() == n as usize)
        .filter(|w| {
            let mut c = vec![0u32; used.len()];
            for &l in w {
                c[l as usize] += 1;
            }
            c == target
        })
        .map(|w| w.into_iter().map(|l| used[l as usize]).collect())
        .collect()
}
