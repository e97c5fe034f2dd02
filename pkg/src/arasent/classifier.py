"""Linear max-margin classifier over the fixed feature schema.

Training minimizes L2-regularized hinge loss with deterministic seeded
stochastic subgradient descent (the bias rides along as a regularized
constant feature). The sparse SVM-light file format is supported for
interchange with the original external tool.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    EmptyTrainingSet,
    ParseError,
    SchemaMismatch,
    SingleClassTrainingSet,
)
from .features import N_SLOTS, FeatureVector


@dataclass(frozen=True)
class TrainConfig:
    regularization: float = 1e-2
    epochs: int = 200
    seed: int = 42
    scale_max: bool = False


@dataclass
class LabeledVector:
    vector: FeatureVector
    label: int  # +1 (PO) or -1 (NG)
    comment: str = ""

    def __post_init__(self):
        if self.label not in (1, -1):
            raise ValueError(f"label must be +1 or -1, got {self.label}")


@dataclass
class Model:
    weights: np.ndarray  # dense, length N_SLOTS, index slot-1
    bias: float
    schema_version: int
    config: TrainConfig = field(default_factory=TrainConfig)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Model):
            return NotImplemented
        return (np.array_equal(self.weights, other.weights)
                and self.bias == other.bias
                and self.schema_version == other.schema_version
                and self.config == other.config)


def _to_dense(data: Sequence[LabeledVector]) -> tuple[np.ndarray, np.ndarray]:
    X = np.zeros((len(data), N_SLOTS))
    y = np.zeros(len(data))
    for r, lv in enumerate(data):
        for slot, value in lv.vector.values.items():
            if not 1 <= slot <= N_SLOTS:
                raise SchemaMismatch(f"feature index {slot} outside schema 1..{N_SLOTS}")
            X[r, slot - 1] = value
        y[r] = lv.label
    return X, y


def train(data: Sequence[LabeledVector],
          config: TrainConfig | None = None) -> Model:
    """Fit a linear model with Pegasos-style SGD.

    Deterministic: the same (data order, seed, config) reproduces the model
    bit for bit.
    """
    config = config or TrainConfig()
    if not data:
        raise EmptyTrainingSet("no training vectors")
    labels = {lv.label for lv in data}
    if labels != {1, -1}:
        raise SingleClassTrainingSet(f"need both labels, got {sorted(labels)}")
    versions = {lv.vector.schema_version for lv in data}
    if len(versions) != 1:
        raise SchemaMismatch(f"mixed schema versions {sorted(versions)}")
    schema_version = versions.pop()

    X, y = _to_dense(data)
    factors = np.ones(N_SLOTS)
    if config.scale_max:
        col_max = np.abs(X).max(axis=0)
        factors = np.where(col_max > 0, col_max, 1.0)
        X = X / factors

    n = len(data)
    lam = config.regularization
    # augmented weight vector: index 0 is the bias riding on a constant 1
    Xa = np.hstack([np.ones((n, 1)), X])
    w = np.zeros(N_SLOTS + 1)
    cap = 1.0 / math.sqrt(lam)
    rng = np.random.RandomState(config.seed)
    t = 0
    for _ in range(config.epochs):
        for i in rng.permutation(n):
            t += 1
            eta = 1.0 / (lam * t)
            margin = y[i] * float(w @ Xa[i])
            w *= 1.0 - eta * lam
            if margin < 1.0:
                w += (eta * y[i]) * Xa[i]
            norm = float(np.linalg.norm(w))
            if norm > cap:
                w *= cap / norm

    weights = w[1:] / factors  # fold scaling back so predict takes raw vectors
    return Model(weights=weights, bias=float(w[0]),
                 schema_version=schema_version, config=config)


def predict(model: Model, v: FeatureVector) -> tuple[int, float]:
    """Label and margin for one vector. Margin 0 maps to +1."""
    if v.schema_version != model.schema_version:
        raise SchemaMismatch(
            f"vector schema {v.schema_version} != model schema {model.schema_version}")
    margin = model.bias
    for slot, value in v.values.items():
        if not 1 <= slot <= N_SLOTS:
            raise SchemaMismatch(f"feature index {slot} outside schema 1..{N_SLOTS}")
        margin += model.weights[slot - 1] * value
    return (1 if margin >= 0 else -1), float(margin)


def objective(model: Model, data: Sequence[LabeledVector]) -> float:
    """L2-regularized mean hinge loss of a model on a dataset."""
    lam = model.config.regularization
    reg = 0.5 * lam * (float(model.weights @ model.weights) + model.bias ** 2)
    hinge = 0.0
    for lv in data:
        _, margin = predict(model, lv.vector)
        hinge += max(0.0, 1.0 - lv.label * margin)
    return reg + hinge / len(data)


def accuracy(model: Model, data: Sequence[LabeledVector]) -> float:
    if not data:
        raise EmptyTrainingSet("no vectors to score")
    hits = sum(1 for lv in data if predict(model, lv.vector)[0] == lv.label)
    return hits / len(data)


def grid_search(train_data: Sequence[LabeledVector],
                dev_data: Sequence[LabeledVector],
                regularizations: Iterable[float] = (1e-3, 1e-2, 1e-1),
                epoch_counts: Iterable[int] = (50, 200),
                seed: int = 42) -> tuple[TrainConfig, Model, float]:
    """Pick the (regularization, epochs) pair with the best dev accuracy.

    Ties keep the first candidate in iteration order, so the search is
    deterministic.
    """
    best: tuple[TrainConfig, Model, float] | None = None
    for reg in regularizations:
        for epochs in epoch_counts:
            config = TrainConfig(regularization=reg, epochs=epochs, seed=seed)
            model = train(train_data, config)
            acc = accuracy(model, dev_data)
            if best is None or acc > best[2]:
                best = (config, model, acc)
    assert best is not None
    return best


def _format_value(value: float) -> str:
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    return f"{value:.6g}"


def write_svmlight(data: Sequence[LabeledVector], path) -> None:
    """Write ``<label> <index>:<value> ... # <comment>`` lines.

    Values carry up to 6 significant digits; integers drop the decimal
    point. The schema version goes in a leading comment line.
    """
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        if data:
            fh.write(f"# schema_version: {data[0].vector.schema_version}\n")
        for lv in data:
            pairs = lv.vector.pairs()
            indices = [i for i, _ in pairs]
            if indices != sorted(set(indices)):
                raise ValueError("feature indices must be strictly increasing")
            body = " ".join(f"{i}:{_format_value(val)}" for i, val in pairs)
            line = f"{lv.label:+d}"
            if body:
                line += " " + body
            if lv.comment:
                line += f" # {lv.comment}"
            fh.write(line + "\n")


def read_svmlight(path) -> list[LabeledVector]:
    """Parse an SVM-light file written by this module or the original tool.

    Arbitrary whitespace between pairs is fine; ``#`` starts a comment.
    """
    out: list[LabeledVector] = []
    schema_version = None
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                head = line.lstrip("#").strip()
                if head.startswith("schema_version:"):
                    try:
                        schema_version = int(head.split(":", 1)[1])
                    except ValueError:
                        raise ParseError(path, line_no, "bad schema_version header") from None
                continue
            body, _, comment = line.partition("#")
            tokens = body.split()
            if not tokens:
                raise ParseError(path, line_no, "missing label")
            if tokens[0] in ("+1", "1"):
                label = 1
            elif tokens[0] == "-1":
                label = -1
            else:
                raise ParseError(path, line_no, f"label must be +1 or -1, got {tokens[0]!r}")
            values: dict[int, float] = {}
            last_index = 0
            for tok in tokens[1:]:
                if tok == "qid" or tok.startswith("qid:"):
                    continue
                index_s, sep, value_s = tok.partition(":")
                if not sep:
                    raise ParseError(path, line_no, f"expected index:value, got {tok!r}")
                try:
                    index = int(index_s)
                    value = float(value_s)
                except ValueError:
                    raise ParseError(path, line_no, f"non-numeric pair {tok!r}") from None
                if index <= last_index:
                    raise ParseError(path, line_no,
                                     f"indices must be strictly increasing at {tok!r}")
                if index > N_SLOTS:
                    raise ParseError(path, line_no,
                                     f"feature index {index} outside schema 1..{N_SLOTS}")
                last_index = index
                if value:
                    values[index] = value
            vector = FeatureVector(values)
            if schema_version is not None:
                vector.schema_version = schema_version
            out.append(LabeledVector(vector, label, comment.strip()))
    return out


def save_model(model: Model, path) -> None:
    """Persist a model as a small text file (full float precision)."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"schema_version: {model.schema_version}\n")
        fh.write(f"regularization: {model.config.regularization!r}\n")
        fh.write(f"epochs: {model.config.epochs}\n")
        fh.write(f"seed: {model.config.seed}\n")
        fh.write(f"scaling: {'max' if model.config.scale_max else 'none'}\n")
        for slot in range(1, N_SLOTS + 1):
            fh.write(f"{slot}: {float(model.weights[slot - 1])!r}\n")
        fh.write(f"bias: {float(model.bias)!r}\n")


def load_model(path) -> Model:
    fields: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            key, sep, value = line.partition(":")
            if not sep:
                raise ParseError(path, line_no, f"expected key: value, got {line!r}")
            fields[key.strip()] = value.strip()
    try:
        weights = np.array([float(fields[str(slot)]) for slot in range(1, N_SLOTS + 1)])
        config = TrainConfig(
            regularization=float(fields["regularization"]),
            epochs=int(fields["epochs"]),
            seed=int(fields["seed"]),
            scale_max=fields.get("scaling", "none") == "max",
        )
        return Model(weights=weights, bias=float(fields["bias"]),
                     schema_version=int(fields["schema_version"]), config=config)
    except KeyError as exc:
        raise ParseError(path, 0, f"missing model field {exc}") from None
    except ValueError as exc:
        raise ParseError(path, 0, str(exc)) from None
