"""Complex-valued neural networks: activation catalog, Wirtinger-calculus
backpropagation, numerical verification and domain-colouring plots."""

from .activations import ActivationSpec, catalog, evaluate, get, partials
from .cplx import WirtingerJet, arg, wirtinger_fd
from .network import Network, forward, init, loss, predict
from .tasks import Dataset, gen_qam, gen_symmetry, gen_xor
from .train import ALGORITHMS, TrainConfig, TrainReport, backward, train

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS", "ActivationSpec", "Dataset", "Network", "TrainConfig", "TrainReport", "WirtingerJet",
    "arg", "backward", "catalog", "evaluate", "forward", "gen_qam", "gen_symmetry", "gen_xor", "get",
    "init", "loss", "partials", "predict", "train", "wirtinger_fd",
]
