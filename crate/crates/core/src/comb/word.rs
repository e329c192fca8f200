//! Words over disjoint letter alphabets, shuffles, and shuffle splitting.

use crate::error::{Result, TowerError};
use std::collections::BTreeSet;
use std::fmt;

/// Word with pairwise distinct positive letters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        let set: BTreeSet<usize> = letters.iter().copied().collect();
        if set.len() != letters.len() {
            return Err(TowerError::RepeatedLetters(format!("{letters:?}")));
        }
        Ok(Word { letters })
    }

    /// The standard word 1 2 ... n.
    pub fn iota(n: usize) -> Self {
        Word {
            letters: (1..=n).collect(),
        }
    }

    /// The word m+1 ... m+n.
    pub fn iota_shifted(m: usize, n: usize) -> Self {
        Word {
            letters: (m + 1..=m + n).collect(),
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn prefix(&self, k: usize) -> Word {
        Word {
            letters: self.letters[..k].to_vec(),
        }
    }

    pub fn suffix_from(&self, k: usize) -> Word {
        Word {
            letters: self.letters[k..].to_vec(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    fn alphabet(&self) -> BTreeSet<usize> {
        self.letters.iter().copied().collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "()");
        }
        if self.letters.iter().all(|&l| l < 10) {
            for l in &self.letters {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

fn check_disjoint(u: &Word, v: &Word) -> Result<()> {
    if u.alphabet().is_disjoint(&v.alphabet()) {
        Ok(())
    } else {
        Err(TowerError::OverlappingAlphabets(format!("{u} and {v}")))
    }
}

/// All interleavings of u and v preserving the internal order of each, sorted
/// lexicographically. With disjoint alphabets the result is multiplicity free
/// with exactly C(|u|+|v|, |u|) elements.
pub fn shuffle(u: &Word, v: &Word) -> Result<Vec<Word>> {
    check_disjoint(u, v)?;
    // DP over suffix pairs: table[i][j] shuffles u[i..] with v[j..].
    let (m, n) = (u.len(), v.len());
    let mut table: Vec<Vec<Vec<Word>>> = vec![vec![Vec::new(); n + 1]; m + 1];
    for i in (0..=m).rev() {
        for j in (0..=n).rev() {
            if i == m && j == n {
                table[i][j] = vec![Word {
                    letters: Vec::new(),
                }];
                continue;
            }
            let mut out = Vec::new();
            if i < m {
                let head = u.letters[i];
                for w in &table[i + 1][j] {
                    let mut letters = Vec::with_capacity(w.len() + 1);
                    letters.push(head);
                    letters.extend_from_slice(&w.letters);
                    out.push(Word { letters });
                }
            }
            if j < n {
                let head = v.letters[j];
                for w in &table[i][j + 1] {
                    let mut letters = Vec::with_capacity(w.len() + 1);
                    letters.push(head);
                    letters.extend_from_slice(&w.letters);
                    out.push(Word { letters });
                }
            }
            table[i][j] = out;
        }
    }
    let mut result = std::mem::take(&mut table[0][0]);
    result.sort();
    result
        .windows(2)
        .for_each(|w| debug_assert!(w[0] != w[1], "shuffle produced a repeat"));
    Ok(result)
}

/// The multiset union over i + j = k of (u_{<=i} shuffled with v_{<=j})
/// concatenated with (u_{>i} shuffled with v_{>j}), sorted. As a multiset this
/// equals `shuffle(u, v)` for every cut 0 <= k <= |u|+|v|.
pub fn shuffle_split(u: &Word, v: &Word, k: usize) -> Result<Vec<Word>> {
    check_disjoint(u, v)?;
    let (m, n) = (u.len(), v.len());
    if k > m + n {
        return Err(TowerError::SplitOutOfRange { k, max: m + n });
    }
    let mut out = Vec::new();
    for i in 0..=k.min(m) {
        let j = k - i;
        if j > n {
            continue;
        }
        let heads = shuffle(&u.prefix(i), &v.prefix(j))?;
        let tails = shuffle(&u.suffix_from(i), &v.suffix_from(j))?;
        for h in &heads {
            for t in &tails {
                out.push(h.concat(t));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Sequence over the two-letter alphabet {T, S}; index set for the rank-one
/// idempotent tower and its Grothendieck groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ts {
    T,
    S,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TsWord {
    letters: Vec<Ts>,
}

impl TsWord {
    pub fn new(letters: Vec<Ts>) -> Self {
        TsWord { letters }
    }

    pub fn empty() -> Self {
        TsWord {
            letters: Vec::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for ch in text.chars() {
            match ch {
                'T' | 't' => letters.push(Ts::T),
                'S' | 's' => letters.push(Ts::S),
                _ => return Err(TowerError::InvalidTsWord(text.to_string())),
            }
        }
        Ok(TsWord { letters })
    }

    pub fn letters(&self) -> &[Ts] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &TsWord) -> TsWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        TsWord { letters }
    }

    pub fn prefix(&self, k: usize) -> TsWord {
        TsWord {
            letters: self.letters[..k].to_vec(),
        }
    }

    pub fn suffix_from(&self, k: usize) -> TsWord {
        TsWord {
            letters: self.letters[k..].to_vec(),
        }
    }
}

impl fmt::Display for TsWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "()");
        }
        for l in &self.letters {
            match l {
                Ts::T => write!(f, "T")?,
                Ts::S => write!(f, "S")?,
            }
        }
        Ok(())
    }
}

/// All {T,S}-words of length n, T before S, in lexicographic order.
pub fn ts_words_of(n: usize) -> Vec<TsWord> {
    let mut out = vec![TsWord::empty()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &out {
            for l in [Ts::T, Ts::S] {
                let mut letters = w.letters.clone();
                letters.push(l);
                next.push(TsWord { letters });
            }
        }
        out = next;
    }
    out.sort();
    out
}
