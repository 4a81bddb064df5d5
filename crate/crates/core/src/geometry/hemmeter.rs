use super::field::FiniteField;
use super::poset::RankedPoset;
use crate::error::{AduError, Result};

pub const HEMMETER_GATE_MESSAGE: &str = "family hem is gated: construction pending";

/// Hemmeter's poset. Only the parameter check is implemented; the build
/// itself is gated and always returns [`AduError::Gated`].
pub fn build_hemmeter(b: usize, n: usize) -> Result<RankedPoset> {
    let f = FiniteField::new(b)?;
    if f.characteristic() == 2 {
        return Err(AduError::Unsupported(format!("hem needs an odd prime power, got b = {b}")));
    }
    if n == 0 {
        return Err(AduError::Unsupported("hem needs N >= 1".into()));
    }
    Err(AduError::Gated(HEMMETER_GATE_MESSAGE.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gate_is_closed() {
        match build_hemmeter(3, 3) {
            Err(AduError::Gated(m)) => assert!(m.contains("construction pending")),
            other => panic!("expected gate, got {other:?}"),
        }
        assert!(matches!(build_hemmeter(4, 2), Err(AduError::Unsupported(_))));
    }
}
