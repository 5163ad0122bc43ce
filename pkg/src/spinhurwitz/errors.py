"""Exception hierarchy. Each error carries a stable code and a CLI exit status."""


class HurwitzError(Exception):
    code = "error"
    exit_status = 2


class DegreeOutOfRange(HurwitzError, ValueError):
    code = "degree_out_of_range"


class ProfileDegreeMismatch(HurwitzError, ValueError):
    code = "profile_degree_mismatch"


class InvalidPartition(HurwitzError, ValueError):
    code = "invalid_partition"


class NotOddProfile(HurwitzError, ValueError):
    code = "not_odd_profile"


class UnrealizableSpinStructure(HurwitzError, ValueError):
    code = "unrealizable_spin_structure"


class InvalidSplit(HurwitzError, ValueError):
    code = "invalid_split"


class BaseCaseUnavailable(HurwitzError):
    code = "base_case_unavailable"
    exit_status = 3


class OracleBudgetExceeded(HurwitzError):
    code = "oracle_budget_exceeded"
    exit_status = 3


class SingularAtEvaluation(HurwitzError):
    code = "singular_at_evaluation"
    exit_status = 1


class HypothesisFailed(HurwitzError):
    code = "hypothesis_failed"
    exit_status = 1


class OddRealKernel(HurwitzError):
    code = "odd_real_kernel"
    exit_status = 1
