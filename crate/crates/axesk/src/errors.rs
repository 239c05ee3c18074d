use std::fmt;

use axes_core::charzero::CharZeroError;
use axes_core::homology::HomologyError;
use axes_core::tc::TcError;
use axes_core::witt::WittError;
use axes_core::words::WordError;

/// Everything the CLI can fail with, tagged with a stable kebab-case
/// category so callers can branch without parsing the message text.
#[derive(Debug)]
pub enum CliError {
    Word(WordError),
    Witt(WittError),
    Tc(TcError),
    Homology(HomologyError),
    CharZero(CharZeroError),
    InvalidArgument(String),
    OracleMismatch(String),
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError::InvalidArgument(message.into())
    }

    pub fn category(&self) -> &'static str {
        match self {
            CliError::Word(WordError::EmptyWord)
            | CliError::Word(WordError::LetterOutOfRange { .. }) => "invalid-word",
            CliError::Word(WordError::BudgetExceeded { .. }) => "budget-exceeded",
            CliError::Witt(error) => witt_category(error),
            CliError::Tc(TcError::Witt(error)) => witt_category(error),
            CliError::Tc(TcError::ZeroLength) => "invalid-argument",
            CliError::Tc(TcError::PeriodDoesNotDivideLength { .. }) => "period-mismatch",
            CliError::Tc(TcError::InvalidParityClass { .. }) => "invalid-parity-class",
            CliError::Tc(TcError::DegreeParityMismatch { .. }) => "degree-parity-mismatch",
            CliError::Tc(TcError::NotCoprimeToCharacteristic { .. }) => "not-coprime",
            CliError::Homology(HomologyError::PeriodTooShort { .. })
            | CliError::Homology(HomologyError::PeriodDoesNotDivideLength { .. }) => {
                "period-mismatch"
            }
            CliError::Homology(HomologyError::InvalidCharacteristic { .. }) => {
                "invalid-characteristic"
            }
            CliError::Homology(HomologyError::WordHasRepetitions) => "word-has-repetitions",
            CliError::Homology(HomologyError::LengthBoundExceeded { .. }) => {
                "length-bound-exceeded"
            }
            CliError::CharZero(_) => "invalid-profile",
            CliError::InvalidArgument(_) => "invalid-argument",
            CliError::OracleMismatch(_) => "oracle-mismatch",
        }
    }
}

fn witt_category(error: &WittError) -> &'static str {
    match error {
        WittError::NotPrime(_) => "not-prime",
        WittError::ZeroFieldDegree => "invalid-field",
        WittError::CharacteristicMismatch { .. } => "characteristic-mismatch",
        WittError::InfiniteInvariantFactor | WittError::InvariantFactorTooLarge(_) => {
            "invalid-group"
        }
        WittError::LengthBoundExceeded { .. } => "length-bound-exceeded",
        WittError::NonConcreteField(_) => "non-concrete-field",
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Word(error) => error.fmt(f),
            CliError::Witt(error) => error.fmt(f),
            CliError::Tc(error) => error.fmt(f),
            CliError::Homology(error) => error.fmt(f),
            CliError::CharZero(error) => error.fmt(f),
            CliError::InvalidArgument(message) | CliError::OracleMismatch(message) => {
                f.write_str(message)
            }
        }
    }
}

impl std::error::Error for CliError {}

impl From<WordError> for CliError {
    fn from(error: WordError) -> Self {
        CliError::Word(error)
    }
}

impl From<WittError> for CliError {
    fn from(error: WittError) -> Self {
        CliError::Witt(error)
    }
}

impl From<TcError> for CliError {
    fn from(error: TcError) -> Self {
        CliError::Tc(error)
    }
}

impl From<HomologyError> for CliError {
    fn from(error: HomologyError) -> Self {
        CliError::Homology(error)
    }
}

impl From<CharZeroError> for CliError {
    fn from(error: CharZeroError) -> Self {
        CliError::CharZero(error)
    }
}
