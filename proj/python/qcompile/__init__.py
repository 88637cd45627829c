"""Statevector simulation and policy-gradient compilation of shallow circuits.

The heavy lifting lives in the C++ extension `qcompile._core`; this package
re-exports its public names. `train` takes a JSON config string (see
`default_config_json()` for the schema and defaults) and returns a summary
dict with the reward trace and the final parameters.
"""

from qcompile._core import (  # noqa: F401
    AnsatzSpec,
    Circuit,
    Gate,
    GaussianPolicy,
    RandomStream,
    StateVector,
    __version__,
    adjoint,
    apply_circuit,
    build_ansatz,
    default_config_json,
    estimate_fidelity,
    hoeffding_bound,
    hoeffding_required_m,
    log_grad_mu,
    log_grad_sigma,
    overlap_probability,
    param_count,
    policy_sample,
    random_target,
    sample_zero_outcome,
    schedule_sigma,
    train,
)
