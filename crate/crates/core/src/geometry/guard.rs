use crate::error::{AduError, Result};

pub const DEFAULT_SIZE_GUARD: u64 = 200_000;
pub const SIZE_GUARD_ENV: &str = "ADU_SIZE_GUARD";

/// Element cap, from `ADU_SIZE_GUARD` when set to a valid integer.
pub fn size_limit() -> u64 {
    std::env::var(SIZE_GUARD_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_SIZE_GUARD)
}

pub fn check_size(requested: u128) -> Result<()> {
    let limit = size_limit();
    if requested > limit as u128 {
        return Err(AduError::SizeGuard { requested, limit });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_cap() {
        if std::env::var(SIZE_GUARD_ENV).is_err() {
            assert!(check_size(200_000).is_ok());
            assert!(matches!(check_size(200_001), Err(AduError::SizeGuard { limit: 200_000, .. })));
        }
    }
}
