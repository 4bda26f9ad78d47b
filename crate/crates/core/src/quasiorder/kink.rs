use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::resource::{make_resource, ResourceState};

/// Interior breakpoint of the Lorenz curve of a two-level resource.
///
/// `gibbs_proxy` is `e^{-βE}` for the background temperature and
/// `state_proxy` is `e^{-β'E}` for the resource, so the resource populates
/// its levels as `(1, state_proxy) / (1 + state_proxy)`. A colder resource
/// (`state_proxy < gibbs_proxy`) kinks at `(1/Z(β), 1/Z(β'))` with
/// `Z = 1 + proxy`; a hotter one at the reflected point with
/// `Z = 1 + 1/proxy`. `state_proxy = 0` is the ground state.
pub fn two_level_kink(
    gibbs_proxy: &Rational,
    state_proxy: &Rational,
) -> Result<(Rational, Rational)> {
    if !gibbs_proxy.is_positive() {
        return Err(Error::NonPositiveProxy(gibbs_proxy.clone()));
    }
    if state_proxy.is_negative() {
        return Err(Error::NonPositiveProxy(state_proxy.clone()));
    }
    let one = Rational::one();
    if state_proxy < gibbs_proxy {
        Ok(((&one + gibbs_proxy).recip()?, (&one + state_proxy).recip()?))
    } else if state_proxy > gibbs_proxy {
        let t = (&one + gibbs_proxy.recip()?).recip()?;
        let l = (&one + state_proxy.recip()?).recip()?;
        Ok((t, l))
    } else {
        Err(Error::NoKink)
    }
}

/// The two-level resource with Gibbs weights `(1, gibbs_proxy) / Z` and
/// populations `(1, state_proxy) / Z'`.
pub fn two_level_resource(gibbs_proxy: &Rational, state_proxy: &Rational) -> Result<ResourceState> {
    if !gibbs_proxy.is_positive() {
        return Err(Error::NonPositiveProxy(gibbs_proxy.clone()));
    }
    if state_proxy.is_negative() {
        return Err(Error::NonPositiveProxy(state_proxy.clone()));
    }
    let z = Rational::one() + gibbs_proxy;
    let z2 = Rational::one() + state_proxy;
    make_resource(
        vec![z2.recip()?, state_proxy / &z2],
        vec![z.recip()?, gibbs_proxy / &z],
    )
}
