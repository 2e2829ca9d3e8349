//! Reports, parameter tables and the self-test behind the `qmds` command.

pub mod construct;
pub mod report;
pub mod selftest;
pub mod table;

/// Process exit status for a failed run.
pub fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<qmds_core::Error>() {
        Some(e) if e.is_check_failure() => 2,
        _ => 1,
    }
}
