import math

import numpy as np
import pytest

from cvnn import activations as act
from cvnn.errors import AlgorithmMismatchError, AssumptionViolationError, SingularityError
from cvnn.network import Layer, Network, forward, init, loss
from cvnn.tasks import Dataset, gen_xor
from cvnn.train import (
    ALGORITHMS, STOP_EPOCHS, STOP_FAILURE, STOP_LOSS, TrainConfig, backward, backward_complex_derivative,
    backward_cr_simplified, backward_partial_derivatives, backward_split, compatible, train,
)
from cvnn.verify import fd_gradient


def _fd_close(net, x, d, algorithm, tol=1e-5):
    g = backward(net, forward(net, x), d, algorithm).flat()
    f = fd_gradient(net, x, d)
    assert np.max(np.abs(g - f)) < tol, (g, f)


def _one(spec_id, weight=0.6 - 0.3j, bias=0.1 + 0.2j, **params):
    return Network([Layer(np.array([[weight]]), np.array([bias]), act.get(spec_id, **params))], 1)


def test_complex_derivative_fc_tanh_matches_fd():
    _fd_close(_one("fc_tanh"), [0.3 + 0.1j], [0.2 - 0.4j], "complex_derivative")


def test_complex_derivative_fc_sin_two_layers():
    net = init([2, 2, 1], "fc_sin", 0.8, 4)
    assert net.n_parameters() == 9
    _fd_close(net, [0.3 + 0.1j, -0.2 + 0.5j], [0.2 - 0.4j], "complex_derivative")


def test_partial_split_tanh_and_apsf():
    _fd_close(_one("split_tanh"), [0.5 + 0.2j], [0.1 + 0.9j], "partial_derivatives")
    _fd_close(_one("apsf", a=1.0, b=1.0), [0.3 - 0.7j], [0.1 + 0.9j], "partial_derivatives")


def test_cr_fc_exp():
    _fd_close(_one("fc_exp"), [0.2 + 0.2j], [1 + 0j], "cr_simplified")


def test_split_sigmoid_deep():
    net = init([2, 3, 1], "split_sigmoid", 0.8, 2)
    _fd_close(net, [0.3 + 0.1j, -0.6 + 0.2j], [0.7 + 0.1j], "split")


@pytest.mark.parametrize("widths", [[1, 1], [2, 2, 1], [3, 3, 2], [2, 3, 3, 2]])
@pytest.mark.parametrize("spec_id", ["fc_tanh", "split_tanh", "cardioid", "cap_erfa", "modrelu"])
def test_all_compatible_algorithms_match_fd(widths, spec_id):
    rng = np.random.default_rng(len(widths) * 31 + len(spec_id))
    spec = act.get(spec_id)
    for algo in ALGORITHMS:
        net = init(widths, spec, 0.8, 1)
        if not compatible(net, algo):
            continue
        x = rng.normal(size=widths[0]) + 1j * rng.normal(size=widths[0])
        d = rng.normal(size=widths[-1]) + 1j * rng.normal(size=widths[-1])
        g = backward(net, forward(net, x), d, algo).flat()
        f = fd_gradient(net, x, d)
        a, b = np.concatenate([g.real, g.imag]), np.concatenate([f.real, f.imag])
        assert np.all(np.abs(a - b) <= np.maximum(1e-4 * np.abs(b), 1e-7)), algo


def test_holomorphic_algorithms_agree():
    rng = np.random.default_rng(9)
    for spec_id in ("fc_tanh", "fc_sin", "fc_exp", "fc_sigmoid"):
        net = init([2, 2, 1], spec_id, 0.5, 3)
        x = rng.normal(size=2) + 1j * rng.normal(size=2)
        d = np.array([0.3 - 0.1j])
        tr = forward(net, x)
        g1 = backward_complex_derivative(net, tr, d)
        g2 = backward_partial_derivatives(net, tr, d)
        g3 = backward_cr_simplified(net, tr, d)
        assert g1.max_abs_diff(g2) <= 1e-10 and g2.max_abs_diff(g3) <= 1e-10


def test_split_agrees_with_partials():
    net = init([2, 3, 1], "split_tanh", 0.9, 0)
    tr = forward(net, [0.2 + 0.3j, -1 + 0.1j])
    assert backward_split(net, tr, [0.5j]).max_abs_diff(backward_partial_derivatives(net, tr, [0.5j])) <= 1e-12


@pytest.mark.parametrize("spec_id", ["fc_tanh", "split_tanh", "cardioid"])
def test_zero_error_zero_gradient(spec_id):
    net = init([2, 2, 1], spec_id, 0.5, 1)
    x = [0.4 + 0.1j, -0.3j]
    tr = forward(net, x)
    for algo in ALGORITHMS:
        if compatible(net, algo):
            g = backward(net, tr, tr.output, algo)
            assert np.all(g.flat() == 0)


def test_mismatch_errors():
    split = init([1, 1], "split_tanh")
    with pytest.raises(AlgorithmMismatchError):
        backward_complex_derivative(split, forward(split, [0j]), [0j])
    with pytest.raises(AlgorithmMismatchError):
        backward_cr_simplified(split, forward(split, [0j]), [0j])
    holo = init([1, 1], "fc_tanh")
    with pytest.raises(AlgorithmMismatchError):
        backward_split(holo, forward(holo, [0j]), [0j])
    step = init([1, 1], "split_step")
    with pytest.raises(AlgorithmMismatchError):
        backward_partial_derivatives(step, forward(step, [0j]), [0j])


def test_conjugate_commutation_enforced():
    # i sin(z) is entire but sigma(conj z) != conj(sigma(z)) away from the imaginary axis
    base = act.get("fc_sin")
    rotated = act.ActivationSpec("rot_sin", (), "fully-complex", True, True, "unbounded",
                                 fn=lambda z: 1j * base.fn(z),
                                 jet=lambda z: (lambda j: (-j[2], -j[3], j[0], j[1]))(base.jet(z)))
    net = Network([Layer(np.array([[1 + 0j]]), np.array([0j]), rotated)], 1)
    with pytest.raises(AssumptionViolationError):
        backward_complex_derivative(net, forward(net, [0.3 + 0.2j]), [0j])
    # the other holomorphic rules do not need the assumption
    _fd_close(net, [0.3 + 0.2j], [0.1j], "cr_simplified")


def test_complex_derivative_exclusion_zone():
    net = Network([Layer(np.array([[1 + 0j]]), np.array([0j]), act.get("fc_tanh"))], 1)
    x = [complex(0.01, math.pi / 2)]
    with pytest.raises(SingularityError) as info:
        backward_complex_derivative(net, forward(net, x), [0j])
    assert info.value.layer == 0
    backward_partial_derivatives(net, forward(net, x), [0j])  # no default exclusion


# ---------------------------------------------------------------- training loop

def test_lr_zero_leaves_weights_unchanged():
    net = init([1, 1], "split_tanh", 0.1, 1)
    with pytest.warns(UserWarning, match="learning_rate is 0"):
        cfg = TrainConfig("split", 0.0, 5)
    rep = train(net, gen_xor("orthogonal"), cfg)
    assert np.array_equal(rep.network.layers[0].weights, net.layers[0].weights)
    assert len(set(rep.epoch_losses)) == 1


def test_config_validation():
    with pytest.raises(ValueError):
        TrainConfig("nope", 0.1, 1)
    with pytest.raises(ValueError):
        TrainConfig("split", -0.1, 1)
    with pytest.raises(ValueError):
        TrainConfig("split", math.inf, 1)
    with pytest.raises(ValueError):
        TrainConfig("split", 0.1, -1)


def test_one_small_step_descends():
    net = _one("split_tanh")
    x, d = [0.5 + 0.2j], [0.1 + 0.9j]
    before = loss(forward(net, x), d)
    rep = train(net, Dataset("one", [x], [d]), TrainConfig("split", 0.01, 1))
    assert rep.epoch_losses[1] < before == rep.epoch_losses[0]


def test_training_is_deterministic_and_does_not_mutate():
    net = init([1, 1], "split_tanh", 0.1, 3)
    snapshot = net.layers[0].weights.copy()
    cfg = TrainConfig("split", 0.5, 30, shuffle=True, seed=4)
    a = train(net, gen_xor("orthogonal"), cfg)
    b = train(net, gen_xor("orthogonal"), cfg)
    assert a.dumps() == b.dumps()
    assert a.network.dumps() == b.network.dumps()
    assert np.array_equal(net.layers[0].weights, snapshot)
    assert a.stop_reason == STOP_EPOCHS and len(a.epoch_losses) == 31


def test_stop_loss():
    rep = train(init([1, 1], "split_tanh", 0.1, 1), gen_xor("orthogonal"), TrainConfig("split", 0.5, 5000, stop_loss=0.05))
    assert rep.stop_reason == STOP_LOSS
    assert rep.epoch_losses[-1] <= 0.05 and rep.epochs_run < 5000


def test_singular_steps_are_skipped():
    net = Network([Layer(np.array([[1 + 0j]]), np.array([0j]), act.get("fc_tanh"))], 1)
    data = Dataset("pole", [[complex(0, math.pi / 2)], [0.1 + 0j]], [[0j], [0j]])
    with pytest.warns(UserWarning):
        rep = train(net, data, TrainConfig("complex_derivative", 0.0, 2))
    assert rep.skipped_steps == 2  # the pole sample, once per epoch
    assert rep.skipped_evaluations == 3  # it also fails every loss evaluation
    assert math.isfinite(rep.epoch_losses[-1])


def test_numeric_failure_is_reported():
    net = Network([Layer(np.array([[1 + 0j]]), np.array([0j]), act.get("fc_exp"))], 1)
    data = Dataset("blowup", [[3 + 0j]], [[0j]])
    rep = train(net, data, TrainConfig("cr_simplified", 50.0, 10))
    assert rep.stop_reason == STOP_FAILURE
    assert rep.failure["epoch"] >= 1 and "reason" in rep.failure


def test_report_serialises():
    import json

    rep = train(init([1, 1], "split_tanh", 0.1, 1), gen_xor("orthogonal"), TrainConfig("split", 0.5, 2))
    doc = json.loads(rep.dumps())
    assert doc["config"]["algorithm"] == "split"
    assert len(doc["epoch_losses"]) == 3 and doc["stop_reason"] == STOP_EPOCHS


def test_train_checks_compatibility_first():
    with pytest.raises(AlgorithmMismatchError):
        train(init([1, 1], "split_tanh"), gen_xor("orthogonal"), TrainConfig("cr_simplified", 0.1, 1))
