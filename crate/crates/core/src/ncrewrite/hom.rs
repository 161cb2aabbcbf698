use std::collections::HashMap;

use super::poly::NCPoly;
use super::presentation::Presentation;
use crate::error::Result;
use crate::qscalar::Ring;

/// Applies the algebra homomorphism determined by the images of runs.
///
/// `image(g, e)` returns the image of the run `g^e` (half-units for scaling
/// generators); `coeff` maps coefficients. Images of repeated runs are cached.
pub fn apply_hom<S: Ring, T: Ring>(
    x: &NCPoly<S>,
    target: &Presentation<T>,
    coeff: impl Fn(&S) -> Result<T>,
    mut image: impl FnMut(usize, i32) -> Result<NCPoly<T>>,
) -> Result<NCPoly<T>> {
    let mut cache: HashMap<(usize, i32), NCPoly<T>> = HashMap::new();
    let mut out = NCPoly::zero();
    for (w, c) in x.terms() {
        let mut acc = NCPoly::constant(coeff(c)?);
        for &(g, e) in w.runs() {
            if acc.is_zero() {
                break;
            }
            let img = match cache.get(&(g, e)) {
                Some(img) => img.clone(),
                None => {
                    let img = image(g, e)?;
                    cache.insert((g, e), img.clone());
                    img
                }
            };
            acc = target.mul(&acc, &img)?;
        }
        out = &out + &acc;
    }
    Ok(out)
}

/// Image of `g^e` for an integer `e`, given the images of `g` and `g^{-1}`.
pub fn power_image<T: Ring>(
    target: &Presentation<T>,
    e: i32,
    pos: &NCPoly<T>,
    neg: Option<&NCPoly<T>>,
) -> Result<NCPoly<T>> {
    if e >= 0 {
        target.pow(pos, e as u32)
    } else {
        let neg = neg.ok_or_else(|| crate::error::Error::domain("negative power of a non-invertible generator"))?;
        target.pow(neg, e.unsigned_abs())
    }
}
