/// Solver for GF(2)-linear equations `L(t) = v`, where `L` is given by the
/// images of the standard basis vectors.
///
/// The image space is kept in echelon form keyed by leading bit, each
/// vector paired with a preimage, so a solve costs one pass over the basis.
#[derive(Clone, Debug)]
pub(crate) struct XorBasis {
    /// (image, preimage) pairs, at most one per leading bit.
    rows: Vec<(u64, u64)>,
}

impl XorBasis {
    pub fn from_images(images: impl IntoIterator<Item = u64>) -> Self {
        let mut rows: Vec<(u64, u64)> = Vec::new();
        for (i, img) in images.into_iter().enumerate() {
            let (mut v, mut pre) = (img, 1u64 << i);
            for &(r, rp) in &rows {
                if v ^ r < v {
                    v ^= r;
                    pre ^= rp;
                }
            }
            if v != 0 {
                rows.push((v, pre));
                // keep rows sorted by descending leading bit so the greedy
                // reduction above is exact
                rows.sort_by(|a, b| b.0.leading_zeros().cmp(&a.0.leading_zeros()).reverse());
            }
        }
        Self { rows }
    }

    /// Some `t` with `L(t) = v`, or `None` if `v` is outside the image.
    pub fn solve(&self, v: u64) -> Option<u64> {
        let (mut v, mut t) = (v, 0u64);
        for &(r, rp) in &self.rows {
            if v ^ r < v {
                v ^= r;
                t ^= rp;
            }
        }
        (v == 0).then_some(t)
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_identity_and_detects_image() {
        let id = XorBasis::from_images([1, 2, 4]);
        assert_eq!(id.rank(), 3);
        assert_eq!(id.solve(5), Some(5));

        // L(e0)=L(e1)=1: image is {0,1}
        let degenerate = XorBasis::from_images([1, 1]);
        assert_eq!(degenerate.rank(), 1);
        assert_eq!(degenerate.solve(1), Some(1));
        assert_eq!(degenerate.solve(2), None);
    }
}
