//! Failure classes and their exit statuses.

use colgraph_enumerate::EnumError;
use colgraph_pairings::PairingError;
use colgraph_syk::SykError;
use thiserror::Error;

/// A certificate that was requested and does not hold.
#[derive(Debug, Error)]
#[error("certificate failed: {0}")]
pub struct CertificateFailed(pub String);

/// A graph that does not pass validation.
#[derive(Debug, Error)]
#[error("invalid input: {0}")]
pub struct Invalid(pub String);

fn pairing_cap(e: &PairingError) -> bool {
    matches!(e, PairingError::CapExceeded { .. })
}

fn enum_cap(e: &EnumError) -> bool {
    match e {
        EnumError::CapExceeded { .. } => true,
        EnumError::Pairing(p) => pairing_cap(p),
        _ => false,
    }
}

fn syk_cap(e: &SykError) -> bool {
    match e {
        SykError::CapExceeded { .. } => true,
        SykError::Pairing(p) => pairing_cap(p),
        _ => false,
    }
}

/// Exit status: 2 for exceeded caps, 3 for failed certificates, 1 otherwise.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if cause.downcast_ref::<CertificateFailed>().is_some() {
            return 3;
        }
        let cap = cause
            .downcast_ref::<PairingError>()
            .is_some_and(pairing_cap)
            || cause.downcast_ref::<EnumError>().is_some_and(enum_cap)
            || cause.downcast_ref::<SykError>().is_some_and(syk_cap);
        if cap {
            return 2;
        }
    }
    1
}
