use std::cmp::Ordering;

/// A run `g^e` of a single generator. Scaling generators count `e` in half-units.
pub type Run = (usize, i32);

/// A single letter of the rewriting system: a generator with exponent `±1`
/// (a half-unit for scaling generators).
pub type Letter = (usize, i8);

/// A monomial as a sequence of runs. Adjacent runs of the same generator are
/// always merged and zero exponents dropped.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Run>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn gen(g: usize, e: i32) -> Self {
        Self::from_runs([(g, e)])
    }

    /// Builds a word, merging adjacent runs and removing empty ones.
    pub fn from_runs(runs: impl IntoIterator<Item = Run>) -> Self {
        let mut out: Vec<Run> = Vec::new();
        for (g, e) in runs {
            push_run(&mut out, g, e);
        }
        Self(out)
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        Self::from_runs(letters.iter().map(|&(g, s)| (g, s as i32)))
    }

    pub fn runs(&self) -> &[Run] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.0.clone();
        for &(g, e) in &other.0 {
            push_run(&mut out, g, e);
        }
        Word(out)
    }

    /// Position of the leftmost adjacent pair of runs in decreasing generator order.
    pub fn first_disorder(&self) -> Option<usize> {
        self.0.windows(2).position(|w| w[0].0 > w[1].0)
    }

    pub fn is_ordered(&self) -> bool {
        self.first_disorder().is_none()
    }

    /// Expands runs into single letters.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for &(g, e) in &self.0 {
            let s = e.signum() as i8;
            out.extend(std::iter::repeat_n((g, s), e.unsigned_abs() as usize));
        }
        out
    }

    /// Total absolute exponent of the generators selected by `pred`.
    pub fn degree_in(&self, pred: impl Fn(usize) -> bool) -> u32 {
        self.0.iter().filter(|(g, _)| pred(*g)).map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn exponent_of(&self, g: usize) -> i32 {
        self.0.iter().filter(|(h, _)| *h == g).map(|(_, e)| e).sum()
    }
}

pub(crate) fn push_run(out: &mut Vec<Run>, g: usize, e: i32) {
    if e == 0 {
        return;
    }
    if let Some(last) = out.last_mut() {
        if last.0 == g {
            last.1 += e;
            if last.1 == 0 {
                out.pop();
            }
            return;
        }
    }
    out.push((g, e));
}

impl Ord for Word {
    /// Runs compare by generator ascending, then exponent descending; a proper
    /// prefix comes first.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.0.iter().zip(&other.0) {
            let o = a.0.cmp(&b.0).then(b.1.cmp(&a.1));
            if o != Ordering::Equal {
                return o;
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.0)
    }
}
