"""本模块实现了各个子命令

每个子命令接收解析后的参数与运行配置，返回报告正文与假设标记。
"""

from collections.abc import Callable
from pathlib import Path
from typing import Any

from bianchi.basechange import BaseChangeInput, bc_pair, bc_stabilizations, bc_verify
from bianchi.characters import chars_of_conductor
from bianchi.config import RunConfig
from bianchi.corpus import bc_characters, corpus
from bianchi.eigensystem import (
    ADMISSIBLE_TAGS,
    DimMode,
    Eigensystem,
    LevelDescriptor,
    TypeTag,
    boundary_dims_bruteforce,
    classify,
    compare_boundary,
    involution,
    predict_dims,
)
from bianchi.exception import BianchiError, ConfigError, MismatchError
from bianchi.log import new_logger
from bianchi.padic import (
    eigenvariety_report,
    family_congruence_report,
    pair_embedding,
    stabilize,
)
from bianchi.quadfield import QuadField, QuadIdeal, prime_ideals, split_prime
from bianchi.recovery import (
    SampleSet,
    SearchSpace,
    density_modulus,
    density_report,
    recover_chars,
    recovery_report,
    sufficient_density,
)
from bianchi.typing import CharPair, Namespace
from bianchi.utils import ReportModel

from .selectors import (
    char_selector,
    load_pair_file,
    parse_char,
    parse_ideal,
    parse_pair,
    parse_type,
    parse_weight,
)

logger = new_logger("bianchi.cli")

type Result = tuple[Any, dict[str, Any]]
"""(报告正文, 假设标记)"""

type Command = Callable[[Namespace, RunConfig], Result]


class FieldReport(ReportModel):
    """虚二次域的基本信息与小素数的分解"""

    field: dict[str, Any]
    units: list[list[int]]
    class_number_one: bool
    splitting: list[dict[str, Any]]


def _field(run: RunConfig) -> QuadField:
    return QuadField(run.field_d)


def _pairs(args: Namespace, run: RunConfig) -> list[tuple[str, CharPair]]:
    """--corpus、--pair-file 或 --pair 选定的特征对"""
    if getattr(args, "corpus", False):
        return [(entry.name, entry.pair) for entry in corpus()]
    if getattr(args, "pair_file", None):
        return [("pair-file", load_pair_file(args.pair_file))]
    if not getattr(args, "pair", None):
        raise ConfigError("需要 --pair、--pair-file 或 --corpus 之一")
    return [(args.pair, parse_pair(_field(run), args.pair))]


def _single_pair(args: Namespace, run: RunConfig) -> CharPair:
    pairs = _pairs(args, run)
    if len(pairs) != 1:
        raise ConfigError("该子命令不支持 --corpus")
    return pairs[0][1]


def _sweep(
    pairs: list[tuple[str, CharPair]], func: Callable[[CharPair], Any]
) -> list[dict[str, Any]]:
    """对多个特征对逐一执行，定理检验之外的失败记录在结果中"""
    results = []
    for name, pair in pairs:
        try:
            report = func(pair)
        except MismatchError:
            raise
        except BianchiError as e:
            logger.warning(f"{name}: {e}")
            results.append({"name": name, "error": str(e)})
            continue
        results.append({"name": name, "report": _plain(report)})
    return results


def _plain(report: Any) -> Any:
    return report.to_json() if hasattr(report, "to_json") else report


# ========== 域与特征 ==========


def field_info(args: Namespace, run: RunConfig) -> Result:
    field = _field(run)
    splitting = [
        split_prime(field, q.a).to_json()
        for q in prime_ideals(field, args.bound or run.prime_bound)
        if q == split_prime(field, q.a).primes[0]
    ]
    report = FieldReport(
        field=field.to_json(),
        units=[u.to_json() for u in field.units()],
        class_number_one=field.class_number_one,
        splitting=splitting,
    )
    return report, {}


def enum_chars(args: Namespace, run: RunConfig) -> Result:
    field = _field(run)
    infinity_type = parse_type(args.type)
    if args.conductor:
        conductors = [parse_ideal(field, args.conductor)]
    else:
        conductors = QuadIdeal.up_to(field, run.conductor_bound)
    chars = []
    for conductor in conductors:
        for index, char in enumerate(chars_of_conductor(field, conductor, infinity_type)):
            chars.append({"selector": char_selector(char, index), "char": char.to_json()})
    return {"infinity_type": list(infinity_type), "count": len(chars), "chars": chars}, {}


# ========== 特征系统 ==========


def eigensystem(args: Namespace, run: RunConfig) -> Result:
    pair = _single_pair(args, run)
    system = Eigensystem(pair)
    primes = system.primes(run.prime_bound, degree_one=args.degree_one)
    if run.output == "csv":
        return system.to_csv(primes), {"degree_one": args.degree_one}
    report = {
        "pair": pair.to_json(),
        "class": classify(pair).to_json(),
        "table": [v.to_json() for v in system.table(primes)],
        "u_eigenvalues": [u.to_json() for u in system.u_eigenvalues()],
    }
    return report, {"degree_one": args.degree_one}


def involution_cmd(args: Namespace, run: RunConfig) -> Result:
    pair = _single_pair(args, run)
    dual = involution(pair)
    primes = Eigensystem(pair).primes(run.prime_bound)
    agrees = Eigensystem(pair).agrees_with(Eigensystem(dual), primes)
    if not agrees:
        raise MismatchError(f"{pair} 与其对合的特征系统不一致")
    report = {
        "pair": pair.to_json(),
        "involution": dual.to_json(),
        "class": classify(pair).to_json(),
        "involution_class": classify(dual).to_json(),
        "primes": len(primes),
        "agrees": agrees,
    }
    return report, {}


def _dims_one(args: Namespace, run: RunConfig, pair: CharPair) -> dict[str, Any]:
    cls = classify(pair)
    weight = parse_weight(args.weight) if args.weight else cls.weight
    if weight is None:
        raise ConfigError(f"无穷型 {pair.infinity_types} 没有对应的权，请用 --weight 指定")
    n = parse_ideal(pair.field, args.level) if args.level else pair.level
    level = LevelDescriptor(n, run.p if args.with_p else None)
    result: dict[str, Any] = {"pair": pair.to_json()}
    predicted = None
    if args.mode in ("predict", "both"):
        predicted = predict_dims(pair, weight, level, stabilization=args.stabilization)
        result[DimMode.PREDICTED.value] = predicted.to_json()
    if args.mode in ("bruteforce", "both"):
        samples = prime_ideals(pair.field, run.prime_bound)
        bruteforced = boundary_dims_bruteforce(
            pair, weight, level, samples, workers=run.workers
        )
        result[DimMode.BRUTEFORCED.value] = bruteforced.to_json()
        if predicted is not None:
            compare_boundary(predicted, bruteforced)
    return result


def dims(args: Namespace, run: RunConfig) -> Result:
    pairs = _pairs(args, run)
    flags = {"mode": args.mode, "with_p": args.with_p}
    if len(pairs) == 1:
        return _dims_one(args, run, pairs[0][1]), flags
    return _sweep(pairs, lambda pair: _dims_one(args, run, pair)), flags


# ========== p 进 ==========


def _stabilize_one(args: Namespace, run: RunConfig, pair: CharPair) -> dict[str, Any]:
    emb = pair_embedding(pair, run.p, precision=run.precision)
    _, report = stabilize(pair, run.p, emb)
    result = {"slopes": report.to_json()}
    if args.eigenvariety:
        result["eigenvariety"] = eigenvariety_report(pair, run.p, emb).to_json()
    return result


def stabilize_cmd(args: Namespace, run: RunConfig) -> Result:
    pairs = _pairs(args, run)
    flags = {"p": run.p, "precision": run.precision}
    if len(pairs) == 1:
        return _stabilize_one(args, run, pairs[0][1]), flags
    return _sweep(pairs, lambda pair: _stabilize_one(args, run, pair)), flags


def _family_one(args: Namespace, run: RunConfig, pair: CharPair) -> Any:
    primes = prime_ideals(pair.field, run.prime_bound)
    return family_congruence_report(
        pair,
        primes,
        run.p,
        args.m,
        args.t,
        precision=run.precision,
        direction=args.direction,
    )


def family_congruence(args: Namespace, run: RunConfig) -> Result:
    pairs = _pairs(args, run)
    if args.corpus:
        pairs = [(n, p) for n, p in pairs if classify(p).tag is TypeTag.TYPE_B]
    flags = {"direction": args.direction, "p": run.p}
    if len(pairs) == 1:
        return _family_one(args, run, pairs[0][1]), flags
    return _sweep(pairs, lambda pair: _family_one(args, run, pair)), flags


# ========== 恢复 ==========


def _space(args: Namespace, run: RunConfig, pair: CharPair | None) -> SearchSpace:
    if args.weight:
        weight = parse_weight(args.weight)
    elif pair is not None and (w := classify(pair).weight) is not None:
        weight = w
    else:
        raise ConfigError("无法推断权，请用 --weight 指定")
    tags = tuple(TypeTag(t) for t in args.tags) if args.tags else ADMISSIBLE_TAGS
    return SearchSpace(
        bound=args.bound or run.conductor_bound,
        weight=weight,
        tags=tags,
        bypass_weight_guard=args.bypass_weight_guard,
    )


def _recover_one(args: Namespace, run: RunConfig, pair: CharPair) -> Any:
    samples = SampleSet.from_pair(pair, run.prime_bound)
    space = _space(args, run, pair)
    candidates = recover_chars(samples, space, workers=run.workers)
    return recovery_report(samples, space, candidates, sample_bound=run.prime_bound)


def recover(args: Namespace, run: RunConfig) -> Result:
    flags = {"degree_one": True, "bypass_weight_guard": args.bypass_weight_guard}
    if args.samples:
        field = _field(run)
        try:
            text = Path(args.samples).read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"无法读取样本文件 {args.samples}: {e}") from e
        samples = SampleSet.from_csv(field, text)
        reference = parse_pair(field, args.reference) if args.reference else None
        space = _space(args, run, reference)
        candidates = recover_chars(
            samples, space, reference=reference, workers=run.workers
        )
        report = recovery_report(samples, space, candidates, reference=reference)
        if not report.matches:
            logger.info("样本与搜索范围内的任何特征对都不一致")
        return report, flags
    pairs = _pairs(args, run)
    if len(pairs) == 1:
        return _recover_one(args, run, pairs[0][1]), flags
    return _sweep(pairs, lambda pair: _recover_one(args, run, pair)), flags


def density(args: Namespace, run: RunConfig) -> Result:
    pair = _single_pair(args, run)
    modulus = parse_ideal(pair.field, args.modulus) if args.modulus else density_modulus(pair)
    flags = {"proxy": True, "escalate": args.escalate}
    if args.escalate:
        return sufficient_density(pair, modulus, start=run.prime_bound), flags
    samples = SampleSet.from_pair(pair, run.prime_bound)
    return density_report(samples, modulus), flags


# ========== 基变换 ==========


def _bc_input(args: Namespace, run: RunConfig, p: int | None) -> BaseChangeInput:
    phi = parse_char(_field(run), args.char)
    return BaseChangeInput(phi, level_exactly_m=args.level_exactly_m, p=p)


def bc_verify_cmd(args: Namespace, run: RunConfig) -> Result:
    inp = _bc_input(args, run, None)
    report = bc_verify(
        inp, run.prime_bound, theta_terms=args.theta_terms, workers=run.workers
    )
    return report, inp.flags


def bc_stabilize(args: Namespace, run: RunConfig) -> Result:
    inp = _bc_input(args, run, run.p)
    emb = pair_embedding(bc_pair(inp.phi), run.p, precision=run.precision)
    return bc_stabilizations(inp, run.p, emb), inp.flags


def corpus_cmd(args: Namespace, run: RunConfig) -> Result:
    report = {
        "pairs": [entry.to_json() for entry in corpus()],
        "characters": [entry.to_json() for entry in bc_characters()],
    }
    return report, {}


COMMANDS: dict[str, Command] = {
    "field-info": field_info,
    "enum-chars": enum_chars,
    "eigensystem": eigensystem,
    "involution": involution_cmd,
    "dims": dims,
    "stabilize": stabilize_cmd,
    "recover": recover,
    "density": density,
    "bc-verify": bc_verify_cmd,
    "bc-stabilize": bc_stabilize,
    "family-congruence": family_congruence,
    "corpus": corpus_cmd,
}
"""子命令名 → 实现"""
