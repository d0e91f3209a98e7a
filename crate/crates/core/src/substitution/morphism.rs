use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeration::{QuadraticParams, RenyiExpansion};
use crate::substitution::word::{parse_letters, render_letters, Letter, Word};

/// A non-erasing morphism on `{0, …, k-1}*` with an axiom letter `z` whose
/// image starts with `z`, so that `φ^n(z)` converges to a fixed point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Substitution {
    images: Vec<Word>,
    axiom: Letter,
}

impl Substitution {
    pub fn new(images: Vec<Word>, axiom: Letter) -> Result<Self> {
        let k = images.len();
        if k == 0 || k > 256 {
            return Err(Error::input(format!(
                "alphabet size must be in 1..=256, got {k}"
            )));
        }
        if let Some(i) = images.iter().position(|w| w.is_empty()) {
            return Err(Error::input(format!("image of letter {i} is empty")));
        }
        if let Some(bad) = images
            .iter()
            .flat_map(|w| w.letters())
            .find(|&&l| l as usize >= k)
        {
            return Err(Error::input(format!(
                "letter {bad} outside alphabet of size {k}"
            )));
        }
        let ax = images
            .get(axiom as usize)
            .ok_or_else(|| Error::input(format!("axiom {axiom} outside alphabet")))?;
        if ax.letters()[0] != axiom || ax.len() < 2 {
            return Err(Error::input(format!(
                "image of the axiom must start with {axiom} and have length >= 2"
            )));
        }
        Ok(Substitution { images, axiom })
    }

    pub fn alphabet_size(&self) -> usize {
        self.images.len()
    }

    pub fn axiom(&self) -> Letter {
        self.axiom
    }

    pub fn image(&self, letter: Letter) -> &Word {
        &self.images[letter as usize]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(Word::len).max().unwrap_or(0)
    }

    /// `φ(w)`, applied letterwise.
    pub fn apply(&self, w: &[Letter]) -> Word {
        let mut out = Vec::with_capacity(w.len() * self.max_image_len());
        for &l in w {
            out.extend_from_slice(self.images[l as usize].letters());
        }
        Word::new(out)
    }

    /// `M[i][j]` = number of occurrences of letter `i` in `φ(j)`.
    pub fn incidence_matrix(&self) -> Vec<Vec<usize>> {
        let k = self.alphabet_size();
        let mut m = vec![vec![0; k]; k];
        for (j, img) in self.images.iter().enumerate() {
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = img.count(i as Letter);
            }
        }
        m
    }

    /// True if some power of the incidence matrix is entrywise positive.
    ///
    /// Checks boolean powers up to Wielandt's bound `(k-1)² + 1`.
    pub fn is_primitive(&self) -> bool {
        let k = self.alphabet_size();
        let base: Vec<Vec<bool>> = self
            .incidence_matrix()
            .into_iter()
            .map(|r| r.into_iter().map(|x| x > 0).collect())
            .collect();
        let mut power = base.clone();
        let bound = (k - 1) * (k - 1) + 1;
        for _ in 0..bound {
            if power.iter().all(|r| r.iter().all(|&x| x)) {
                return true;
            }
            power = bool_product(&power, &base);
        }
        false
    }

    /// Recognizes `φ(0) = 0^a 1`, `φ(1) = 0^b 1` with axiom 0.
    pub fn quadratic_params(&self) -> Option<QuadraticParams> {
        if self.alphabet_size() != 2 || self.axiom != 0 {
            return None;
        }
        let zeros_then_one = |w: &Word| -> Option<u32> {
            let (last, init) = w.letters().split_last()?;
            (*last == 1 && init.iter().all(|&l| l == 0)).then_some(init.len() as u32)
        };
        let a = zeros_then_one(&self.images[0])?;
        let b = zeros_then_one(&self.images[1])?;
        QuadraticParams::new(a, b).ok()
    }

    pub fn render_image(&self, letter: Letter) -> String {
        render_letters(self.image(letter).letters(), self.alphabet_size())
    }
}

fn bool_product(x: &[Vec<bool>], y: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let k = x.len();
    (0..k)
        .map(|i| (0..k).map(|j| (0..k).any(|l| x[i][l] && y[l][j])).collect())
        .collect()
}

impl fmt::Debug for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Substitution(")?;
        for l in 0..self.alphabet_size() {
            if l > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{l}->{}", self.render_image(l as Letter))?;
        }
        write!(f, "; axiom {})", self.axiom)
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in 0..self.alphabet_size() {
            if l > 0 {
                write!(f, ", ")?;
            }
            write!(f, "φ({l})={}", self.render_image(l as Letter))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct SubstitutionJson {
    alphabet: usize,
    images: Vec<String>,
    axiom: Letter,
}

impl Serialize for Substitution {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        SubstitutionJson {
            alphabet: self.alphabet_size(),
            images: (0..self.alphabet_size())
                .map(|l| self.render_image(l as Letter))
                .collect(),
            axiom: self.axiom,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Substitution {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SubstitutionJson::deserialize(deserializer)?;
        if raw.images.len() != raw.alphabet {
            return Err(D::Error::custom(
                "images length does not match alphabet size",
            ));
        }
        let images = raw
            .images
            .iter()
            .map(|s| parse_letters(s, raw.alphabet))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Substitution::new(images, raw.axiom).map_err(D::Error::custom)
    }
}

/// `φ(0) = 0^a 1`, `φ(1) = 0^b 1` with axiom 0. The Sturmian boundary
/// `b = a - 1` is allowed; check [`QuadraticParams::is_sturmian`].
pub fn quadratic_substitution(params: QuadraticParams) -> Substitution {
    let img = |r: u32| {
        let mut v = vec![0; r as usize];
        v.push(1);
        Word::new(v)
    };
    Substitution::new(vec![img(params.a()), img(params.b())], 0)
        .expect("quadratic images are valid")
}

/// The canonical substitution of a non-simple Parry number with
/// `d_β(1) = t_1 … t_m (t_{m+1} … t_{m+p})^ω`, over `{0, …, m+p-1}`:
///
/// * `φ(j) = 0^{t_{j+1}} (j+1)` for `j <= m+p-2`,
/// * `φ(m+p-1) = 0^{t_{m+p}} m`.
///
/// The representation is used as given, without minimizing `(m, p)`.
pub fn parry_substitution(renyi: &RenyiExpansion) -> Result<Substitution> {
    if renyi.is_simple() {
        return Err(Error::unsupported(format!(
            "{renyi} is a finite (simple Parry) expansion; only non-simple expansions have this substitution"
        )));
    }
    let m = renyi.m();
    let p = renyi.p();
    if m < 1 {
        return Err(Error::unsupported(format!(
            "{renyi}: need a preperiod of length >= 1"
        )));
    }
    let k = m + p;
    if k > 256 {
        return Err(Error::input("alphabet larger than 256 letters"));
    }
    let images = (0..k)
        .map(|j| {
            let mut v = vec![0; renyi.digit(j) as usize];
            v.push(if j + 1 < k {
                (j + 1) as Letter
            } else {
                m as Letter
            });
            Word::new(v)
        })
        .collect();
    Substitution::new(images, 0)
}
