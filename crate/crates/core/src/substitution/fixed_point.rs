use crate::substitution::{Letter, Substitution, Word};

/// Lazily materialized prefix of the fixed point `lim φ^n(z)`.
///
/// The buffer only grows, so a prefix of length `L` is always a prefix of any
/// later, longer prefix. Generation reads the buffer at a cursor and appends
/// the image of each letter; since `φ(z) = z w` the buffer stays ahead of the
/// cursor.
#[derive(Clone, Debug)]
pub struct FixedPointStream {
    sub: Substitution,
    buffer: Vec<Letter>,
    cursor: usize,
}

impl FixedPointStream {
    pub fn new(sub: Substitution) -> Self {
        let buffer = sub.image(sub.axiom()).letters().to_vec();
        FixedPointStream {
            sub,
            buffer,
            cursor: 1,
        }
    }

    pub fn substitution(&self) -> &Substitution {
        &self.sub
    }

    /// Generates at least `len` letters; overshoots by less than the longest
    /// image.
    pub fn ensure(&mut self, len: usize) {
        if self.buffer.len() >= len {
            return;
        }
        self.buffer
            .reserve(len - self.buffer.len() + self.sub.max_image_len());
        while self.buffer.len() < len {
            let letter = self.buffer[self.cursor];
            self.cursor += 1;
            let image = self.sub.image(letter).letters();
            self.buffer.extend_from_slice(image);
        }
    }

    /// The first `len` letters.
    pub fn prefix(&mut self, len: usize) -> &[Letter] {
        self.ensure(len);
        &self.buffer[..len]
    }

    /// Everything generated so far.
    pub fn materialized(&self) -> &[Letter] {
        &self.buffer
    }
}

/// The first `len` letters of the fixed point of `sub` starting with its axiom.
pub fn fixed_point_prefix(sub: &Substitution, len: usize) -> Word {
    let mut stream = FixedPointStream::new(sub.clone());
    Word::from_slice(stream.prefix(len))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeration::{QuadraticParams, RenyiExpansion};
    use crate::substitution::{parry_substitution, quadratic_substitution};

    fn q(a: u32, b: u32) -> Substitution {
        quadratic_substitution(QuadraticParams::new(a, b).unwrap())
    }

    #[test]
    fn three_one_prefix() {
        assert_eq!(
            fixed_point_prefix(&q(3, 1), 14).to_string(),
            "00010001000101"
        );
        assert_eq!(fixed_point_prefix(&q(3, 1), 1).to_string(), "0");
        assert_eq!(fixed_point_prefix(&q(3, 1), 0).to_string(), "");
    }

    #[test]
    fn block_shape_a_times_then_b() {
        // 0^a 1 repeated a times, then 0^b 1
        for (a, b) in [(3, 1), (4, 2), (6, 3)] {
            let w = fixed_point_prefix(&q(a, b), ((a + 1) * a + b + 1) as usize);
            let mut expected = String::new();
            for _ in 0..a {
                expected += &"0".repeat(a as usize);
                expected += "1";
            }
            expected += &"0".repeat(b as usize);
            expected += "1";
            assert_eq!(w.to_string(), expected);
        }
    }

    #[test]
    fn self_consistency_at_a_million() {
        let sub = q(3, 1);
        let u = fixed_point_prefix(&sub, 1_000_000);
        // φ applied to the first N letters reproduces a prefix of u
        let image = sub.apply(&u.letters()[..200_000]);
        assert!(image.len() <= u.len());
        assert_eq!(image.letters(), &u.letters()[..image.len()]);
    }

    #[test]
    fn prefix_stability() {
        let r: RenyiExpansion = "3 1 (2)".parse().unwrap();
        let sub = parry_substitution(&r).unwrap();
        let mut stream = FixedPointStream::new(sub.clone());
        for len in [1, 7, 64, 1000, 5000] {
            let short = stream.prefix(len).to_vec();
            let long = fixed_point_prefix(&sub, 2 * len);
            assert_eq!(&long.letters()[..len], &short[..]);
        }
    }
}
