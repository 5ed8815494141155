"""Command-line entry points: generate, serve, eval.

Settings resolve in the order CLI flag, BLENDSMITH_* environment variable,
JSON config file, built-in default.  Exit codes: 0 success, 2 resource or
input-file problems, 3 pipeline failures (no roots, no candidates, ...).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import __version__, engine
from .errors import MismatchError, PipelineError, ResourceError
from .ranking import kendall_tau, load_name_list, load_ratings, ndcg
from .resources import load_resource_dir
from .scoring import AppealWeights


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blendsmith",
        description="Generate blended brand-name candidates from a description.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--resources", help="directory with the resource files")
    common.add_argument("--config", help="JSON config file")

    generate = sub.add_parser(
        "generate", parents=[common], help="generate names for a description"
    )
    generate.add_argument("--description", required=True, help="what the thing does")
    generate.add_argument("--top", type=int, help="how many names to print")
    generate.add_argument(
        "--no-diversify",
        action="store_const",
        const=False,
        dest="diversify",
        help="plain appeal order, no repetition penalty",
    )
    generate.add_argument("--iterations", type=int, help="diversification rounds")
    generate.add_argument("--weights", help="appeal weights as R,P,M,U")
    generate.add_argument("--max-per-root", type=int, help="synonym cap per root word")
    generate.add_argument("--format", choices=("text", "json"), help="output format")

    serve = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    serve.add_argument("--bind", help="HOST:PORT to listen on")

    evaluate = sub.add_parser(
        "eval", parents=[common], help="score rankings against human ratings"
    )
    evaluate.add_argument(
        "--ratings",
        action="append",
        help="TSV of name/good/fair/bad rows; repeatable",
    )
    evaluate.add_argument(
        "--order",
        action="append",
        help="system ranking, one name per line; pairs with --ratings",
    )
    evaluate.add_argument("--rank-a", help="first ranking for Kendall tau")
    evaluate.add_argument("--rank-b", help="second ranking for Kendall tau")
    return parser


def _load_config(args) -> dict:
    path = args.config or os.environ.get("BLENDSMITH_CONFIG")
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise ResourceError(f"cannot read config {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ResourceError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ResourceError(f"config {path} must hold a JSON object")
    return doc


def _resolve(flag, env_key: str, config: dict, key: str, default):
    if flag is not None:
        return flag
    raw = os.environ.get(env_key)
    if raw is not None:
        return raw
    if key in config:
        return config[key]
    return default


def _as_int(value, label: str) -> int:
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ResourceError(f"{label} must be an integer, got {value!r}") from None


def _as_bool(value, label: str) -> bool:
    if isinstance(value, bool):
        return value
    text = str(value).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off"):
        return False
    raise ResourceError(f"{label} must be a boolean, got {value!r}")


def _as_weights(value) -> AppealWeights:
    parts = value.split(",") if isinstance(value, str) else list(value)
    if len(parts) != 4:
        raise ResourceError("weights need exactly four values: R,P,M,U")
    try:
        numbers = [float(p) for p in parts]
    except (TypeError, ValueError):
        raise ResourceError(f"weights must be numbers, got {value!r}") from None
    try:
        return AppealWeights(*numbers)
    except ValueError as exc:
        raise ResourceError(str(exc)) from None


def _as_format(value) -> str:
    text = str(value).strip().lower()
    if text not in ("text", "json"):
        raise ResourceError(f"format must be text or json, got {value!r}")
    return text


def _require_store(args, config: dict):
    directory = _resolve(args.resources, "BLENDSMITH_RESOURCES", config, "resources", None)
    if directory is None:
        raise ResourceError("no resource directory given (--resources)")
    return load_resource_dir(directory)


def _print_table(response: engine.GenerationResponse):
    if not response.names:
        print("no names generated")
        return
    width = max(max(len(n.display) for n in response.names), len("name"))
    header = (
        f"{'#':>3}  {'name':<{width}}  {'appeal':>7}  {'read':>5}  "
        f"{'pron':>5}  {'memo':>5}  {'uniq':>5}  sources"
    )
    print(header)
    for rank, name in enumerate(response.names, start=1):
        print(
            f"{rank:>3}  {name.display:<{width}}  {name.appeal:>7.4f}  "
            f"{name.readability:>5.3f}  {name.pronounceability:>5.3f}  "
            f"{name.memorability:>5.3f}  {name.uniqueness:>5.3f}  "
            f"{'+'.join(name.sources)}"
        )
    print(f"{len(response.names)} shown of {response.candidate_count} candidates")


def _cmd_generate(args) -> int:
    config = _load_config(args)
    store = _require_store(args, config)
    weights_raw = _resolve(args.weights, "BLENDSMITH_WEIGHTS", config, "weights", None)
    request = engine.GenerationRequest(
        description=args.description,
        top_k=_as_int(_resolve(args.top, "BLENDSMITH_TOP", config, "top", 30), "top"),
        diversify=_as_bool(
            _resolve(args.diversify, "BLENDSMITH_DIVERSIFY", config, "diversify", True),
            "diversify",
        ),
        iterations=_as_int(
            _resolve(args.iterations, "BLENDSMITH_ITERATIONS", config, "iterations", 30),
            "iterations",
        ),
        weights=_as_weights(weights_raw) if weights_raw is not None else None,
        max_per_root=_as_int(
            _resolve(
                args.max_per_root, "BLENDSMITH_MAX_PER_ROOT", config, "max_per_root", 5
            ),
            "max_per_root",
        ),
    )
    response = engine.generate(request, store)
    fmt = _as_format(_resolve(args.format, "BLENDSMITH_FORMAT", config, "format", "text"))
    if fmt == "json":
        print(json.dumps(response.as_dict(include_elapsed=False), indent=2))
    else:
        _print_table(response)
    return 0


def _parse_bind(value: str) -> tuple[str, int]:
    host, sep, port = str(value).rpartition(":")
    if not sep or not host:
        raise ResourceError(f"bind must look like HOST:PORT, got {value!r}")
    return host, _as_int(port, "bind port")


def _cmd_serve(args) -> int:
    config = _load_config(args)
    store = _require_store(args, config)
    host, port = _parse_bind(
        _resolve(args.bind, "BLENDSMITH_BIND", config, "bind", "127.0.0.1:8000")
    )
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(store), host=host, port=port)
    return 0


def _cmd_eval(args) -> int:
    ratings_files = args.ratings or []
    order_files = args.order or []
    if len(ratings_files) != len(order_files):
        raise ResourceError("each --ratings file needs a matching --order file")
    if not ratings_files and not (args.rank_a or args.rank_b):
        raise ResourceError("nothing to evaluate; pass --ratings/--order or --rank-a/--rank-b")
    values = []
    for ratings_path, order_path in zip(ratings_files, order_files):
        value = ndcg(load_name_list(order_path), load_ratings(ratings_path))
        values.append(value)
        print(f"ndcg {order_path}: {value:.4f}")
    if values:
        print(f"average ndcg: {sum(values) / len(values):.4f}")
    if args.rank_a or args.rank_b:
        if not (args.rank_a and args.rank_b):
            raise ResourceError("--rank-a and --rank-b go together")
        tau = kendall_tau(load_name_list(args.rank_a), load_name_list(args.rank_b))
        print(f"kendall tau: {tau:.4f}")
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "generate":
            return _cmd_generate(args)
        if args.command == "serve":
            return _cmd_serve(args)
        return _cmd_eval(args)
    except (ResourceError, MismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PipelineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
