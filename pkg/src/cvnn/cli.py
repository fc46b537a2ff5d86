"""Command-line entry point: ``cvnn <command> ...``.

Exit status: 0 success, 1 a check or training run failed, 2 usage error.
Output files go to ``--out``, else ``$CVNN_OUT_DIR``, else ``./cvnn-out``.
"""

from __future__ import annotations

import argparse
import configparser
import json
import os
import sys
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

from . import activations as act
from . import render, tasks, verify
from .network import init, predict
from .train import ALGORITHMS, STOP_FAILURE, TrainConfig, incompatibility, train

OUT_ENV = "CVNN_OUT_DIR"
DEFAULT_OUT = "cvnn-out"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

ALGO_ALIASES = {"cd": "complex_derivative", "partial": "partial_derivatives", "cr": "cr_simplified"}
TASKS = ("xor", "symmetry", "qam")


class UsageError(Exception):
    pass


def out_dir(flag: str | None) -> Path:
    return Path(flag or os.environ.get(OUT_ENV) or DEFAULT_OUT)


# ---------------------------------------------------------------- run config

@dataclass
class RunConfig:
    task: str = "xor"
    encoding: str = "orthogonal"
    bits: int = 4
    order: int = 4
    samples: int = 2000
    noise: float = tasks.DEFAULT_NOISE
    window: int = 1
    scale: str = "unit"
    task_seed: int = 0
    widths: list[int] = field(default_factory=lambda: [1, 1])
    activation: str = "split_tanh"
    init_radius: float = 0.1
    algorithm: str = "split"
    lr: float = 0.5
    epochs: int = 5000
    shuffle: bool = False
    seed: int = 0
    stop_loss: float = 0.0
    out: str | None = None

    def validate(self) -> None:
        def bad(name: str, why: str):
            raise UsageError(f"config field {name!r}: {why}")

        if self.task not in TASKS:
            bad("task", f"unknown task {self.task!r}; choose from {TASKS}")
        if self.task == "xor" and self.encoding not in tasks.XOR_ENCODINGS:
            bad("encoding", f"unknown XOR encoding {self.encoding!r}")
        if self.task == "qam" and self.scale not in tasks.QAM_SCALES:
            bad("scale", f"unknown QAM scale {self.scale!r}")
        if self.activation not in act.CATALOG_IDS:
            bad("activation", f"unknown activation id {self.activation!r}")
        self.algorithm = ALGO_ALIASES.get(self.algorithm, self.algorithm)
        if self.algorithm not in ALGORITHMS:
            bad("algorithm", f"unknown algorithm {self.algorithm!r}; choose from {ALGORITHMS}")
        why = incompatibility(act.get(self.activation), self.algorithm)
        if why:
            bad("algorithm", why)
        if len(self.widths) < 2 or min(self.widths) < 1:
            bad("widths", f"need at least two positive widths, got {self.widths}")
        if not self.init_radius > 0:
            bad("init_radius", f"must be > 0, got {self.init_radius}")
        if not self.lr >= 0:
            bad("lr", f"must be >= 0, got {self.lr}")
        if self.epochs < 0:
            bad("epochs", f"must be >= 0, got {self.epochs}")
        if not self.stop_loss >= 0:
            bad("stop_loss", f"must be >= 0, got {self.stop_loss}")

    def dataset(self) -> tasks.Dataset:
        try:
            if self.task == "xor":
                return tasks.gen_xor(self.encoding)
            if self.task == "symmetry":
                return tasks.gen_symmetry(self.bits, self.task_seed)
            return tasks.gen_qam(self.order, self.samples, self.noise, seed=self.task_seed,
                                 window=self.window, scale=self.scale)
        except ValueError as exc:
            raise UsageError(f"task {self.task!r}: {exc}") from None


_CONFIG_SECTIONS = {"task": ("task", "encoding", "bits", "order", "samples", "noise", "window",
                             "scale", "task_seed"),
                    "network": ("widths", "activation", "init_radius"),
                    "train": ("algorithm", "lr", "epochs", "shuffle", "seed", "stop_loss"),
                    "output": ("out",)}


def _coerce(name: str, text: str):
    kind = {f.name: f.type for f in fields(RunConfig)}[name]
    try:
        if name == "widths":
            return [int(v) for v in str(text).split(",") if v.strip()]
        if kind == "int":
            return int(text)
        if kind == "float":
            return float(text)
        if kind == "bool":
            if isinstance(text, bool):
                return text
            low = str(text).strip().lower()
            if low not in ("1", "0", "true", "false", "yes", "no", "on", "off"):
                raise ValueError(text)
            return low in ("1", "true", "yes", "on")
        return text
    except ValueError:
        raise UsageError(f"config field {name!r}: cannot parse {text!r}") from None


def load_config(path: str | None, overrides: dict) -> RunConfig:
    """Defaults, then the config file, then non-None flag overrides."""
    values: dict = {}
    if path:
        cp = configparser.ConfigParser()
        if not cp.read(path):
            raise UsageError(f"cannot read config file {path}")
        for section in cp.sections():
            allowed = _CONFIG_SECTIONS.get(section)
            if allowed is None:
                raise UsageError(f"config section [{section}] is unknown; expected {sorted(_CONFIG_SECTIONS)}")
            for key, text in cp.items(section):
                if key not in allowed:
                    raise UsageError(f"config field {key!r} does not belong in [{section}]")
                values[key] = _coerce(key, text)
    for key, v in overrides.items():
        if v is not None:
            values[key] = _coerce(key, v) if isinstance(v, str) else v
    cfg = RunConfig(**values)
    cfg.validate()
    return cfg


# ---------------------------------------------------------------- commands

def cmd_list(args) -> int:
    specs = act.catalog(args.category)
    if args.format == "records":
        for s in specs:
            print(json.dumps(s.record()))
        return EXIT_OK
    rows = [("id", "category", "params", "diff", "holo", "bounded_on", "singularities")]
    for s in specs:
        r = s.record()
        rows.append((s.id, s.category, json.dumps(r["params"]) if r["params"] else "-",
                     "y" if s.differentiable else "n", "y" if s.holomorphic else "n", s.bounded_on,
                     "; ".join(r["singularities"]) or "-"))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]) - 1)]
    for row in rows:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)) + "  " + row[-1])
    return EXIT_OK


def _xor_summary(net, data: tasks.Dataset, encoding: str) -> dict:
    outputs = [complex(predict(net, x)[0]) for x in data.inputs]
    correct = [tasks.xor_decide(o, encoding) == tasks.xor_label(complex(x[0]))
               for o, x in zip(outputs, data.inputs)]
    return {"correct": int(sum(correct)), "of": len(correct),
            "outputs": [[o.real, o.imag] for o in outputs]}


def cmd_train(args) -> int:
    overrides = {"task": args.task, "widths": args.widths, "activation": args.af, "algorithm": args.algo,
                 "lr": args.lr, "epochs": args.epochs, "seed": args.seed, "shuffle": args.shuffle,
                 "init_radius": args.init_radius, "stop_loss": args.stop_loss, "encoding": args.encoding,
                 "bits": args.bits, "order": args.order, "samples": args.samples, "window": args.window,
                 "scale": args.scale, "task_seed": args.task_seed, "out": args.out}
    cfg = load_config(args.config, overrides)
    data = cfg.dataset()
    if cfg.widths[0] != data.input_width or cfg.widths[-1] != data.target_width:
        raise UsageError(f"config field 'widths': {cfg.widths} does not fit task {cfg.task!r} "
                         f"({data.input_width} inputs, {data.target_width} outputs)")
    net = init(cfg.widths, cfg.activation, cfg.init_radius, cfg.seed)
    tc = TrainConfig(cfg.algorithm, cfg.lr, cfg.epochs, cfg.shuffle, cfg.seed, cfg.stop_loss)
    report = train(net, data, tc)
    if cfg.task == "xor":
        report.extras["xor"] = _xor_summary(report.network, data, cfg.encoding)
    report.extras["run_config"] = asdict(cfg)
    report.extras["dataset"] = {"name": data.name, "params": data.params, "size": len(data)}

    dest = out_dir(cfg.out)
    dest.mkdir(parents=True, exist_ok=True)
    (dest / "report.json").write_text(report.dumps())
    (dest / "network.json").write_text(report.network.dumps())
    losses = report.epoch_losses
    print(f"{cfg.task}: {report.stop_reason} after {report.epochs_run} epochs; "
          f"loss {losses[0]:.6g} -> {losses[-1]:.6g}")
    if "xor" in report.extras:
        x = report.extras["xor"]
        print(f"xor: {x['correct']}/{x['of']} correct")
    print(f"wrote {dest / 'report.json'} and {dest / 'network.json'}")
    if report.stop_reason == STOP_FAILURE:
        print(f"training failed: {report.failure}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _ids(values: list[str] | None) -> list[str] | None:
    if not values:
        return None
    ids = [i for v in values for i in v.split(",") if i]
    for i in ids:
        if i not in act.CATALOG_IDS:
            raise UsageError(f"unknown activation id {i!r}")
    return ids


def cmd_verify(args) -> int:
    reports = verify.run_suite(args.suite, _ids(args.af), args.seed)
    print(verify.summary_table(reports))
    if args.out:
        path = Path(args.out)
        if path.parent != Path(""):
            path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("".join(json.dumps(r.record()) + "\n" for r in reports))
    return EXIT_FAIL if any(r.status == verify.FAIL for r in reports) else EXIT_OK


def cmd_render(args) -> int:
    if args.fixture:
        if args.fixture not in render.FIXTURES:
            raise UsageError(f"unknown fixture {args.fixture!r}; choose from {sorted(render.FIXTURES)}")
        subject, name = args.fixture, args.fixture
    else:
        _ids([args.af])
        subject, name = act.get(args.af), args.af
    try:
        grid = verify.GridSpec.parse(args.grid) if args.grid else render.FIXTURE_GRID
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    written = []
    if args.csv or args.part:
        part = args.part or "abs"
        path = Path(args.csv) if args.csv else out_dir(None) / f"{name}-{part}.csv"
        path.parent.mkdir(parents=True, exist_ok=True)
        render.write_csv(path, render.surface_export(subject, grid, part), grid, part)
        written.append(path)
    if args.out or not written:
        path = Path(args.out) if args.out else out_dir(None) / f"{name}.ppm"
        path.parent.mkdir(parents=True, exist_ok=True)
        img = render.domain_color(subject, grid, args.shading)
        img.write(path)
        written.append(path)
        print(f"sha256 {img.sha256()}")
    for p in written:
        print(f"wrote {p}")
    return EXIT_OK


def cmd_probe(args) -> int:
    _ids([args.af])
    spec = act.get(args.af)
    try:
        z = complex(args.z.replace(" ", ""))
    except ValueError:
        raise UsageError(f"cannot parse complex number {args.z!r}") from None
    doc: dict = {"id": spec.id, "z": [z.real, z.imag]}
    try:
        w = act.evaluate(spec, z)
        doc["value"] = [w.real, w.imag]
        if spec.differentiable:
            j = act.partials(spec, z)
            doc["partials"] = {"ux": j.ux, "uy": j.uy, "vx": j.vx, "vy": j.vy}
    except Exception as exc:  # report any evaluation error as data
        doc["error"] = f"{type(exc).__name__}: {exc}"
    print(json.dumps(doc))
    return EXIT_FAIL if "error" in doc else EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cvnn", description="Complex-valued neural network toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    ls = sub.add_parser("list-activations", help="list the activation catalog")
    ls.add_argument("--category", choices=act.CATEGORIES, help="only this category")
    ls.add_argument("--format", choices=("table", "records"), default="table",
                    help="table for people, records for one JSON object per line")
    ls.set_defaults(func=cmd_list)

    tr = sub.add_parser("train", help="train a network on a toy task",
                        description="Settings come from defaults, then --config, then flags (flags win).")
    tr.add_argument("--config", help="INI file with [task], [network], [train], [output] sections")
    tr.add_argument("--task", choices=TASKS)
    tr.add_argument("--encoding", choices=tasks.XOR_ENCODINGS, help="XOR target encoding")
    tr.add_argument("--bits", type=int, help="symmetry: string length")
    tr.add_argument("--order", type=int, help="qam: constellation order (4 or 16)")
    tr.add_argument("--samples", type=int, help="qam: number of samples")
    tr.add_argument("--window", type=int, help="qam: received samples per input")
    tr.add_argument("--scale", choices=tasks.QAM_SCALES, help="qam: constellation scale")
    tr.add_argument("--task-seed", type=int, help="seed for task data")
    tr.add_argument("--widths", help="comma-separated layer widths, e.g. 1,1")
    tr.add_argument("--af", help="activation id (see list-activations)")
    tr.add_argument("--algo", help=f"one of {', '.join(ALGORITHMS)} (aliases: {', '.join(ALGO_ALIASES)})")
    tr.add_argument("--lr", type=float, help="learning rate (0 is allowed and warned)")
    tr.add_argument("--epochs", type=int)
    tr.add_argument("--seed", type=int, help="seed for initialisation and shuffling")
    tr.add_argument("--shuffle", action=argparse.BooleanOptionalAction, default=None)
    tr.add_argument("--init-radius", type=float, help="radius of the initialisation disc")
    tr.add_argument("--stop-loss", type=float, help="stop once the mean loss is at or below this")
    tr.add_argument("--out", help=f"output directory (default ${OUT_ENV} or ./{DEFAULT_OUT})")
    tr.set_defaults(func=cmd_train)

    ve = sub.add_parser("verify", help="run numerical check suites")
    ve.add_argument("--suite", choices=verify.SUITES, default="all")
    ve.add_argument("--af", action="append", help="activation id(s); repeat or comma-separate (default: all)")
    ve.add_argument("--seed", type=int, default=0)
    ve.add_argument("--out", help="write one JSON record per check to this file")
    ve.set_defaults(func=cmd_verify)

    re_ = sub.add_parser("render", help="domain-colour an activation or fixture, or export a surface")
    who = re_.add_mutually_exclusive_group(required=True)
    who.add_argument("--af", help="activation id")
    who.add_argument("--fixture", help=f"built-in function: {', '.join(sorted(render.FIXTURES))}")
    re_.add_argument("--grid", help="remin:remax:immin:immax:NXxNY (default -2:2:-2:2:256x256)")
    re_.add_argument("--shading", choices=render.SHADINGS, default="arg-only")
    re_.add_argument("--part", choices=render.PARTS, help="surface part for CSV export (default abs)")
    re_.add_argument("--csv", help="CSV output path for the surface export")
    re_.add_argument("--out", help="PPM output path")
    re_.set_defaults(func=cmd_render)

    pr = sub.add_parser("probe", help="evaluate an activation and its partials at one point")
    pr.add_argument("--af", required=True)
    pr.add_argument("z", help="complex point, e.g. 1+2j")
    pr.set_defaults(func=cmd_probe)
    return p


def _join_grid(argv: list[str]) -> list[str]:
    # Grid windows often start with a minus sign, which argparse reads as a flag.
    out, k = [], 0
    while k < len(argv):
        if argv[k] == "--grid" and k + 1 < len(argv):
            out.append(f"--grid={argv[k + 1]}")
            k += 2
        else:
            out.append(argv[k])
            k += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_grid(list(sys.argv[1:] if argv is None else argv)))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"cvnn {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"cvnn {args.command}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
