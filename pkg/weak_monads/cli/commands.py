"""
Commands of the law checker: check, construct, search, oracle and laws

:author: Angelo Cutaia
:copyright: Copyright 2021, LINKS Foundation
:version: 1.0.0

..

    Copyright 2021 LINKS Foundation

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
"""

# Standard library
import os
from dataclasses import asdict
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple

# Bit masks
from bitarray import bitarray

# Exact linear algebra
from ..linalg import ExactRing, enumerate_maps

# Monadics
from .. import monadics
from ..monadics import (
    MonadClass,
    QUnitalAlgebra,
    algebra_dictionary,
    enumerate_algebras,
    enumerate_compatible_modules,
    eta_tilde,
    law_report,
    module_pairing_oracle,
    module_report,
    mu_hat,
    mu_tilde,
    regularity_consequences,
    weak_monad_properties,
)

# Comonadics
from .. import comonadics
from ..comonadics import (
    ComonadClass,
    QCounitalCoalgebra,
    coalgebra_dictionary,
    comodule_pairing_oracle,
    comodule_report,
    delta_hat,
    delta_tilde,
    enumerate_coalgebras,
    enumerate_compatible_comodules,
    eps_tilde,
    law_report_co,
    regularity_consequences_co,
    weak_comonad_properties,
)

# Pairing
from .. import pairing
from ..pairing import (
    SCAN_SEED,
    DualPairing,
    comparison_check,
    enumerate_pairings,
    homset_oracle,
    induced_comonad,
    induced_monad,
    natural_endomorphism_identities,
    pairing_report,
    related_adjunction,
    sample_pairings,
)
from ..pairing import regularity_consequences as pairing_consequences

# Entwine
from .. import entwine
from ..entwine import (
    ModuleEntwining,
    entwined_coproduct,
    entwined_product,
    equivalence_scan,
    f_reg_report,
    f_reg_report_co,
    lifting_report_comodules,
    lifting_report_modules,
    roundtrip_report,
)

# Mixed
from .. import mixed
from ..mixed import (
    MixedDistributiveLaw,
    PreconditionViolated as MixedPreconditionViolated,
    alt_counit,
    alt_unit,
    comonad_on_modules,
    counit_consequences,
    kappa_tau_commute,
    kappa_tau_properties,
    lift_comonad_to_modules,
    lift_monad_to_comodules,
    mixed_report,
    mixed_scan,
    monad_on_comodules,
    pre_counit_report,
    pre_unit_report,
    unit_consequences,
)

# Command line
from .constants import (
    BASED_KINDS,
    CONSTRUCTIONS,
    FLAG_ALIASES,
    LAWS,
    SEARCH_FLAGS,
    SUITES,
    CliException,
    UnknownKind,
)
from .instance import (
    CoproductInput,
    Instance,
    ProductInput,
    Structure,
    dump,
    from_structure,
    load,
    to_structure,
    write,
)
from .report import Flag, Report, flags_from_booleans, flags_from_results, merge

# Utilities
from ..utilities import ScanRunner, WeakLogger, set_indices

# ------------------------------------------------------------------------------

# Module version
__version_info__ = (1, 0, 0)
__version__ = ".".join(str(x) for x in __version_info__)

# Documentation strings format
__docformat__ = "restructuredtext en"

# ------------------------------------------------------------------------------


logger = WeakLogger.get_logger("Commands")

LAW_INDEX = {
    "monadics": monadics.LAWS,
    "comonadics": comonadics.LAWS,
    "pairing": pairing.LAWS,
    "entwine": entwine.LAWS,
    "mixed": mixed.LAWS,
    "cli": LAWS,
}
"""Package -> flag name -> display label, the source of LAWS.md"""

Outcome = Tuple[List[Flag], Dict[str, Any]]
"""Flags and payload produced by a suite"""


#########
# CHECK #
#########


def _family(
    enumerate_family: Callable[..., Iterable], structure, dims: int, cap: Optional[int]
) -> List:
    """Test (co)modules of a structure; none over the rationals, which cannot be enumerated"""
    if structure.ring.is_rational:
        return []
    return list(enumerate_family(structure, dims, cap))


def _monad_suite(F: QUnitalAlgebra, cap: Optional[int]) -> Outcome:
    report = law_report(F)
    payload = {
        "classification": report.classification,
        "theta": report.theta,
        "theta_bar": report.theta_bar,
    }
    return flags_from_results(report.results, monadics.LAWS), payload


def _algebra_dictionary_suite(F: QUnitalAlgebra, cap: Optional[int]) -> Outcome:
    report = algebra_dictionary(F)
    flags = flags_from_booleans(
        {key: entry.agrees for key, entry in report.entries.items()}, monadics.LAWS
    )
    flags += flags_from_booleans(report.constructions, LAWS)
    payload = {
        "entries": {key: asdict(entry) for key, entry in report.entries.items()},
    }
    return flags, payload


def _algebra_properties_suite(F: QUnitalAlgebra, cap: Optional[int]) -> Outcome:
    flags = flags_from_results(regularity_consequences(F).results, monadics.LAWS)
    payload: Dict[str, Any] = {"weak": False}
    if law_report(F).classification is MonadClass.WEAK:
        modules = _family(enumerate_compatible_modules, F, monadics.ORACLE_DIMS, cap)
        properties = weak_monad_properties(F, modules)
        flags += flags_from_results(properties.results, monadics.LAWS)
        payload = {"weak": True, "modules_checked": len(modules)}
    return flags, payload


def _comonad_suite(G: QCounitalCoalgebra, cap: Optional[int]) -> Outcome:
    report = law_report_co(G)
    payload = {
        "classification": report.classification,
        "gamma": report.gamma,
        "gamma_bar": report.gamma_bar,
    }
    return flags_from_results(report.results, comonadics.LAWS), payload


def _coalgebra_dictionary_suite(G: QCounitalCoalgebra, cap: Optional[int]) -> Outcome:
    report = coalgebra_dictionary(G)
    # compatibility is read two ways; the flag asks for one matching reading
    agreement = {
        key: entry.agrees
        for key, entry in report.entries.items()
        if key != "coproduct-middle-leg"
    }
    flags = flags_from_booleans(agreement, comonadics.LAWS)
    flags += flags_from_booleans(
        {"comult-compatible-reading": bool(report.matching_readings)}, LAWS
    )
    flags += flags_from_booleans(report.constructions, LAWS)
    payload = {
        "entries": {key: asdict(entry) for key, entry in report.entries.items()},
        "readings": dict(report.readings),
        "matching_readings": list(report.matching_readings),
    }
    return flags, payload


def _coalgebra_properties_suite(G: QCounitalCoalgebra, cap: Optional[int]) -> Outcome:
    flags = flags_from_results(regularity_consequences_co(G).results, comonadics.LAWS)
    payload: Dict[str, Any] = {"weak": False}
    if law_report_co(G).classification is ComonadClass.WEAK:
        comodules = _family(enumerate_compatible_comodules, G, comonadics.ORACLE_DIMS, cap)
        properties = weak_comonad_properties(G, comodules)
        flags += flags_from_results(properties.results, comonadics.LAWS)
        payload = {"weak": True, "comodules_checked": len(comodules)}
    return flags, payload


def _module_suite(M, cap: Optional[int]) -> Outcome:
    report = module_report(M)
    return flags_from_results(report.results, monadics.LAWS), {}


def _comodule_suite(M, cap: Optional[int]) -> Outcome:
    report = comodule_report(M)
    return flags_from_results(report.results, comonadics.LAWS), {}


_PAIRING_FLAGS = ("alpha-regular", "beta-regular", "alpha-symmetric", "beta-symmetric")


def _pairing_suite(P: DualPairing, cap: Optional[int]) -> Outcome:
    report = pairing_report(P)
    results = {name: report.results[name] for name in _PAIRING_FLAGS}
    payload = {
        "semiadjoint": report.semiadjoint,
        "adjunction": report.adjunction,
        "theta": report.theta,
        "theta_bar": report.theta_bar,
        "gamma": report.gamma,
        "gamma_bar": report.gamma_bar,
    }
    return flags_from_results(results, pairing.LAWS), payload


def _comparison_suite(P: DualPairing, cap: Optional[int]) -> Outcome:
    report = asdict(comparison_check(P, pairing.ORACLE_DIMS, cap))
    symmetric = {
        key: report.pop(key) for key in ("alpha_symmetric", "beta_symmetric")
    }
    flags = flags_from_booleans(
        {key.replace("_", "-"): value for key, value in report.items()}, pairing.LAWS
    )
    return flags, symmetric


def _identities_suite(P: DualPairing, cap: Optional[int]) -> Outcome:
    flags = flags_from_results(natural_endomorphism_identities(P).results, pairing.LAWS)
    flags += flags_from_results(pairing_consequences(P).results, pairing.LAWS)
    return flags, {}


def _lifting_suite(E, cap: Optional[int]) -> Outcome:
    if isinstance(E, ModuleEntwining):
        report = lifting_report_modules(E)
        family = _family(enumerate_compatible_modules, E.F, entwine.ORACLE_DIMS, cap)
        consequences = f_reg_report(E, family)
    else:
        report = lifting_report_comodules(E)
        family = _family(enumerate_compatible_comodules, E.G, entwine.ORACLE_DIMS, cap)
        consequences = f_reg_report_co(E, family)
    flags = flags_from_results(report.results, entwine.LAWS)
    flags += flags_from_results(consequences.results, entwine.LAWS)
    payload = {"lifts": report.lifts, "objects_checked": len(family)}
    return flags, payload


def _roundtrip_suite(E, cap: Optional[int]) -> Outcome:
    report = roundtrip_report(E, entwine.ORACLE_DIMS, cap)
    flags = flags_from_booleans(
        {
            "roundtrip-action": report.action_ok,
            "roundtrip-normalized": report.normalized_matches,
            "roundtrip-stable": report.stable,
            "roundtrip-same-lifts": report.same_lifts,
        },
        LAWS,
    )
    payload = {"objects_checked": report.objects_checked, "witness": report.witness}
    return flags, payload


def _entwined_suite(data, cap: Optional[int]) -> Outcome:
    if isinstance(data, ProductInput):
        structure = entwined_product(data.F, data.T, data.lam)
        payload = {"m": structure.m, "u": structure.u, "associative": bool(structure.algebra)}
    else:
        structure = entwined_coproduct(data.G, data.T, data.psi)
        payload = {
            "delta": structure.delta_entwined,
            "eps": structure.eps,
            "coassociative": bool(structure.coalgebra),
        }
    flags = flags_from_results(structure.results, entwine.LAWS)
    flags += flags_from_booleans({"entwined-weak": structure.weak}, LAWS)
    payload["diagrams"] = structure.diagrams
    return flags, payload


def _mixed_suite(W: MixedDistributiveLaw, cap: Optional[int]) -> Outcome:
    report = mixed_report(W)
    payload = {
        "xi": report.xi,
        "kappa_hat": report.kappa_hat,
        "tau_hat": report.tau_hat,
        "lifts_to_modules": report.lifts_to_modules,
        "lifts_to_comodules": report.lifts_to_comodules,
    }
    return flags_from_results(report.results, mixed.LAWS), payload


def _optional(*steps: Callable[[], Outcome]) -> Outcome:
    """
    Run every step whose hypotheses hold; refuse only when none of them does
    """
    flags: List[Flag] = []
    payload: Dict[str, Any] = {"skipped": []}
    refusal = None
    for step in steps:
        try:
            step_flags, step_payload = step()
        except MixedPreconditionViolated as error:
            payload["skipped"].append(error.label)
            refusal = refusal or error
            continue
        flags += step_flags
        payload.update(step_payload)
    if not flags and refusal is not None:
        raise refusal
    return flags, payload


def _kappa_tau_suite(W: MixedDistributiveLaw, cap: Optional[int]) -> Outcome:
    flags = flags_from_results(kappa_tau_properties(W).results, mixed.LAWS)
    # observed, not asserted
    payload: Dict[str, Any] = {"kappa_tau_commute": kappa_tau_commute(W).holds, "skipped": []}
    for consequences in (counit_consequences, unit_consequences):
        try:
            flags += flags_from_results(consequences(W).results, mixed.LAWS)
        except MixedPreconditionViolated as error:
            payload["skipped"].append(error.label)
    return flags, payload


def _lifted_suite(W: MixedDistributiveLaw, cap: Optional[int]) -> Outcome:
    def modules() -> Outcome:
        report = lift_comonad_to_modules(W, mixed.ORACLE_DIMS, cap)
        return flags_from_results(report.results, mixed.LAWS), {
            "modules_checked": report.objects_checked
        }

    def comodules() -> Outcome:
        report = lift_monad_to_comodules(W, mixed.ORACLE_DIMS, cap)
        return flags_from_results(report.results, mixed.LAWS), {
            "comodules_checked": report.objects_checked
        }

    return _optional(modules, comodules)


def _structures_suite(W: MixedDistributiveLaw, cap: Optional[int]) -> Outcome:
    def on_modules() -> Outcome:
        comonad = comonad_on_modules(W, mixed.ORACLE_DIMS, cap)
        return flags_from_results(comonad.results, mixed.LAWS), {
            "delta_bar_free": comonad.delta_bar_free,
            "comonad_on_modules_weak": comonad.weak,
        }

    def on_comodules() -> Outcome:
        monad = monad_on_comodules(W, mixed.ORACLE_DIMS, cap)
        return flags_from_results(monad.results, mixed.LAWS), {
            "mu_mixed_free": monad.mu_mixed_free,
            "monad_on_comodules_weak": monad.weak,
        }

    return _optional(on_modules, on_comodules)


def _units_suite(W: MixedDistributiveLaw, cap: Optional[int]) -> Outcome:
    def counit() -> Outcome:
        pre = pre_counit_report(W, mixed.ORACLE_DIMS, cap)
        alternative = alt_counit(W, mixed.ORACLE_DIMS, cap)
        flags = flags_from_results(pre.results, mixed.LAWS)
        flags += flags_from_results(alternative.results, mixed.LAWS)
        return flags, {"pre_counit_agrees": pre.agrees, "alt_counit_agrees": alternative.agrees}

    def unit() -> Outcome:
        pre = pre_unit_report(W, mixed.ORACLE_DIMS, cap)
        alternative = alt_unit(W, mixed.ORACLE_DIMS, cap)
        flags = flags_from_results(pre.results, mixed.LAWS)
        flags += flags_from_results(alternative.results, mixed.LAWS)
        return flags, {"pre_unit_agrees": pre.agrees, "alt_unit_agrees": alternative.agrees}

    return _optional(counit, unit)


SUITE_RUNNERS: Dict[Tuple[str, str], Callable[[Structure, Optional[int]], Outcome]] = {
    ("algebra", "monad"): _monad_suite,
    ("algebra", "dictionary"): _algebra_dictionary_suite,
    ("algebra", "properties"): _algebra_properties_suite,
    ("coalgebra", "comonad"): _comonad_suite,
    ("coalgebra", "dictionary"): _coalgebra_dictionary_suite,
    ("coalgebra", "properties"): _coalgebra_properties_suite,
    ("module", "module"): _module_suite,
    ("comodule", "comodule"): _comodule_suite,
    ("pairing", "pairing"): _pairing_suite,
    ("pairing", "comparison"): _comparison_suite,
    ("pairing", "identities"): _identities_suite,
    ("entwining-module", "lifting"): _lifting_suite,
    ("entwining-module", "roundtrip"): _roundtrip_suite,
    ("entwining-comodule", "lifting"): _lifting_suite,
    ("entwining-comodule", "roundtrip"): _roundtrip_suite,
    ("entwining-product", "entwined"): _entwined_suite,
    ("entwining-coproduct", "entwined"): _entwined_suite,
    ("mixed", "mixed"): _mixed_suite,
    ("mixed", "kappa-tau"): _kappa_tau_suite,
    ("mixed", "lifted"): _lifted_suite,
    ("mixed", "structures"): _structures_suite,
    ("mixed", "units"): _units_suite,
}
"""(kind, suite) -> function deciding the laws of the suite"""


def check_instance(instance: Instance, suite: str = None, cap: int = None) -> Report:
    """
    Run one suite on an already loaded instance

    :param instance: instance to check
    :param suite: suite name, the first suite of the kind when omitted,
        ``all`` for every suite of the kind
    :param cap: enumeration cap of the test families
    :raise UnknownKind: when the suite does not apply to the kind
    """
    suite = suite or SUITES[instance.kind][0]
    if suite == "all":
        return merge(
            instance.name,
            "check:all",
            (check_instance(instance, name, cap) for name in SUITES[instance.kind]),
        )
    if suite not in SUITES[instance.kind]:
        raise UnknownKind(
            f"suite {suite!r} does not apply to {instance.kind}, use one of {SUITES[instance.kind]}"
        )
    flags, payload = SUITE_RUNNERS[(instance.kind, suite)](to_structure(instance), cap)
    report = Report(instance.name, f"check:{suite}", tuple(flags), payload)
    for flag in report.failures:
        logger.info(f"{instance.name}: {flag.label} fails")
    return report


def cmd_check(path: str, suite: str = None, cap: int = None) -> Report:
    """
    Load an instance file and run a suite on it

    :param path: instance file
    :param suite: suite name, the default suite of the kind when omitted
    :param cap: enumeration cap of the test families
    :return: the report; its exit code is 0 when every law holds
    """
    return check_instance(load(path), suite, cap)


# ------------------------------------------------------------------------------


#############
# CONSTRUCT #
#############


def _construct_entwined_product(data: ProductInput) -> QUnitalAlgebra:
    structure = entwined_product(data.F, data.T, data.lam)
    if structure.algebra is None:
        raise entwine.PreconditionViolated(monadics.LAWS["assoc"])
    return structure.algebra


def _construct_entwined_coproduct(data: CoproductInput) -> QCounitalCoalgebra:
    structure = entwined_coproduct(data.G, data.T, data.psi)
    if structure.coalgebra is None:
        raise entwine.PreconditionViolated(comonadics.LAWS["coassoc"])
    return structure.coalgebra


CONSTRUCTORS: Dict[str, Callable[..., Structure]] = {
    "mu-tilde": mu_tilde,
    "eta-tilde": eta_tilde,
    "mu-hat": mu_hat,
    "delta-tilde": delta_tilde,
    "eps-tilde": eps_tilde,
    "delta-hat": delta_hat,
    "entwined-product": _construct_entwined_product,
    "entwined-coproduct": _construct_entwined_coproduct,
    "related-adjunction": lambda P, side="alpha": related_adjunction(P, side).pairing,
    "induced-monad": induced_monad,
    "induced-comonad": induced_comonad,
}
"""Construction -> function building the new structure"""


def _classification(structure: Structure) -> Dict[str, Any]:
    if isinstance(structure, QUnitalAlgebra):
        return {"classification": law_report(structure).classification}
    if isinstance(structure, QCounitalCoalgebra):
        return {"classification": law_report_co(structure).classification}
    return {"flags": pairing_report(structure).flags()}


def construct_instance(instance: Instance, construction: str, side: str = "alpha") -> Instance:
    """
    Apply a construction to a loaded instance

    :param instance: source instance
    :param construction: construction name
    :param side: regular side of a pairing, for related-adjunction
    :return: the constructed instance
    :raise UnknownKind: when the construction does not apply to the kind
    :raise PreconditionViolated: with the label of the failing hypothesis
    """
    if construction not in CONSTRUCTIONS:
        raise UnknownKind(f"unknown construction {construction!r}")
    if CONSTRUCTIONS[construction] != instance.kind:
        raise UnknownKind(
            f"{construction} applies to {CONSTRUCTIONS[construction]}, not {instance.kind}"
        )
    structure = to_structure(instance)
    if construction == "related-adjunction":
        built = CONSTRUCTORS[construction](structure, side)
    else:
        built = CONSTRUCTORS[construction](structure)
    name = f"{instance.name}-{construction}" if instance.name else construction
    return from_structure(built, name)


def cmd_construct(
    path: str, construction: str, out: str = None, side: str = "alpha"
) -> Report:
    """
    Build a new instance from an instance file

    :param path: source instance file
    :param construction: construction name
    :param out: destination file, the document is put in the payload when omitted
    :param side: regular side of a pairing, for related-adjunction
    """
    source = load(path)
    built = construct_instance(source, construction, side)
    payload: Dict[str, Any] = {"kind": built.kind}
    payload.update(_classification(to_structure(built)))
    if out:
        payload["written"] = write(built, out)
    else:
        payload["instance"] = dump(built)
    return Report(source.name, f"construct:{construction}", (), payload)


# ------------------------------------------------------------------------------


##########
# SEARCH #
##########


def parse_predicate(kind: str, predicate: str) -> List[Tuple[str, bool]]:
    """
    Read a flag pattern such as ``regular,!compatible``

    :return: (flag, expected value) pairs
    :raise UnknownKind: on a flag the kind does not know
    """
    terms = []
    for term in filter(None, (part.strip() for part in (predicate or "").split(","))):
        expected = not term.startswith("!")
        name = FLAG_ALIASES.get(term.lstrip("!"), term.lstrip("!"))
        if name not in SEARCH_FLAGS[kind]:
            raise UnknownKind(f"{kind} has no flag {name!r}, use one of {SEARCH_FLAGS[kind]}")
        terms.append((name, expected))
    return terms


def select(masks: Dict[str, bitarray], terms: Sequence[Tuple[str, bool]], total: int) -> bitarray:
    """Mask of the candidates matching every term"""
    mask = bitarray(total, endian="little")
    mask.setall(True)
    for name, expected in terms:
        mask &= masks[name] if expected else ~masks[name]
    return mask


def _algebra_flags(F: QUnitalAlgebra) -> Tuple[bool, ...]:
    report = law_report(F)
    return (
        report.unit_regular,
        report.unit_symmetric,
        report.mult_compatible,
        report.classification.at_least(MonadClass.R_UNITAL),
        report.classification is MonadClass.WEAK,
    )


def _coalgebra_flags(G: QCounitalCoalgebra) -> Tuple[bool, ...]:
    report = law_report_co(G)
    return (
        report.counit_regular,
        report.counit_symmetric,
        report.comult_compatible,
        report.classification.at_least(ComonadClass.R_COUNITAL),
        report.classification is ComonadClass.WEAK,
    )


def _pairing_flags(P: DualPairing) -> Tuple[bool, ...]:
    flags = pairing_report(P).flags()
    return tuple(flags[name] for name in SEARCH_FLAGS["pairing"])


def _dims(dims: Sequence[int], count: int) -> Tuple[int, ...]:
    if not dims or len(dims) > count:
        raise CliException(f"expected {count} dimension(s), got {list(dims or [])}")
    return tuple(dims) + (dims[-1],) * (count - len(dims))


def _persist(
    kind: str, candidates: Iterable[Structure], mask: bitarray, out: Optional[str], ring: ExactRing
) -> List[str]:
    if not out:
        return []
    written: List[str] = []
    wanted = set_indices(mask)
    if not wanted:
        return written
    last, wanted = wanted[-1], set(wanted)
    for index, candidate in enumerate(candidates):
        if index > last:
            break
        if index not in wanted:
            continue
        name = f"{kind}-{ring}-{index:06d}"
        written.append(write(from_structure(candidate, name), os.path.join(out, f"{name}.json")))
    return written


def _law_candidates(instance: Instance, size: int, cap: Optional[int]) -> Iterable[Structure]:
    """Structures of a based search, in enumeration order of the law"""
    base = to_structure(instance)
    for law in enumerate_maps(size, size, instance.ring, cap):
        if instance.kind == "mixed":
            yield MixedDistributiveLaw(base.F, base.G, law)
        elif instance.kind == "entwining-product":
            yield ProductInput(base.F, base.T, law)
        else:
            yield CoproductInput(base.G, base.T, law)


def _based_search(
    base: Instance, cap: Optional[int], runner: ScanRunner
) -> Tuple[Dict[str, bitarray], int, Dict[str, Any], int]:
    structure = to_structure(base)
    if base.kind == "mixed":
        scan = mixed_scan(structure.F, structure.G, cap, runner)
        masks = {name.replace("_", "-"): mask for name, mask in scan.masks.items()}
        size = structure.F.dim * structure.G.dim
        return masks, scan.candidates, {"implications": scan.implications}, size
    if base.kind == "entwining-product":
        first, second = structure.F, structure.T
    else:
        first, second = structure.G, structure.T
    scan = equivalence_scan(first, second, cap, runner)
    payload = {
        "diagrams_imply_weak": scan.diagrams_imply_weak,
        "weak_implies_diagrams": scan.weak_implies_diagrams,
    }
    if scan.counterexample is not None:
        payload["counterexample"] = scan.counterexample
    return dict(scan.masks), scan.candidates, payload, first.dim * second.dim


def cmd_search(
    kind: str,
    dims: Sequence[int] = (),
    ring: str = "Z2",
    predicate: str = "",
    out: str = None,
    cap: int = None,
    seed: int = SCAN_SEED,
    samples: int = None,
    base: str = None,
    runner: ScanRunner = None,
) -> Report:
    """
    Enumerate the structures of a kind and keep those matching a flag pattern

    :param kind: kind to enumerate
    :param dims: carrier dimensions, one for (co)algebras, a and b for pairings
    :param ring: ring descriptor, a Z_n ring
    :param predicate: comma separated flags, ``!flag`` requires a failure
    :param out: directory receiving one instance file per match
    :param cap: enumeration cap
    :param seed: seed of the sampled pairings
    :param samples: sample this many pairings instead of enumerating them all
    :param base: instance fixing the structures of a law search
    :param runner: scan runner, a default one when omitted
    :return: report with the counts, exit code 0 whatever the count
    """
    if kind not in SEARCH_FLAGS:
        raise UnknownKind(f"cannot search {kind!r}, use one of {tuple(SEARCH_FLAGS)}")
    terms = parse_predicate(kind, predicate)
    runner = runner or ScanRunner()
    payload: Dict[str, Any] = {"kind": kind}

    if kind in BASED_KINDS:
        if not base:
            raise CliException(f"searching {kind} needs --base")
        base_instance = load(base)
        if base_instance.kind != kind:
            raise UnknownKind(f"--base must be a {kind} instance, got {base_instance.kind}")
        masks, total, extra, size = _based_search(base_instance, cap, runner)
        payload.update(extra)
        exact_ring = base_instance.ring

        def candidates() -> Iterable[Structure]:
            return _law_candidates(base_instance, size, cap)

    else:
        exact_ring = ExactRing.parse(ring)
        if kind == "algebra":
            (dim,) = _dims(dims, 1)

            def candidates() -> Iterable[Structure]:
                return enumerate_algebras(dim, exact_ring, cap)

            evaluate = _algebra_flags
        elif kind == "coalgebra":
            (dim,) = _dims(dims, 1)

            def candidates() -> Iterable[Structure]:
                return enumerate_coalgebras(dim, exact_ring, cap)

            evaluate = _coalgebra_flags
        else:
            a, b = _dims(dims, 2)
            if samples:
                payload["seed"] = seed

                def candidates() -> Iterable[Structure]:
                    return sample_pairings(exact_ring, a, b, samples, seed)

            else:

                def candidates() -> Iterable[Structure]:
                    return enumerate_pairings(exact_ring, a, b, cap)

            evaluate = _pairing_flags
        masks = runner.run_scan(candidates(), evaluate, SEARCH_FLAGS[kind])
        total = len(masks[SEARCH_FLAGS[kind][0]])

    mask = select(masks, terms, total)
    payload.update(
        {
            "candidates": total,
            "matches": mask.count(),
            "counts": {name: masks[name].count() for name in SEARCH_FLAGS[kind]},
        }
    )
    written = _persist(kind, candidates(), mask, out, exact_ring)
    if written:
        payload["written"] = written
    logger.info(f"{mask.count()} of {total} {kind} candidates match {predicate or '<all>'}")
    return Report("", f"search:{kind}", (), payload)


# ------------------------------------------------------------------------------


##########
# ORACLE #
##########


def oracle_instance(instance: Instance, dims: int = None, cap: int = None) -> Report:
    """
    Compare the hom-set oracle of an instance with its closed-form flags

    :raise UnknownKind: when the kind has no oracle
    """
    structure = to_structure(instance)
    if instance.kind == "algebra":
        report = module_pairing_oracle(structure, dims or monadics.ORACLE_DIMS, cap)
    elif instance.kind == "coalgebra":
        report = comodule_pairing_oracle(structure, dims or comonadics.ORACLE_DIMS, cap)
    elif instance.kind == "pairing":
        report = homset_oracle(structure, dims or pairing.ORACLE_DIMS, cap)
    else:
        raise UnknownKind(f"{instance.kind} has no hom-set oracle")

    payload = asdict(report)
    flags = flags_from_booleans({"oracle-agrees": report.agrees}, LAWS)
    if not report.agrees:
        logger.error(
            f"{instance.name}: oracle says regular={report.pointwise_regular},"
            f" flags say regular={report.flags_regular}"
        )
    return Report(instance.name, "oracle", tuple(flags), payload)


def cmd_oracle(path: str, dims: int = None, cap: int = None) -> Report:
    """
    Load an instance file and run its hom-set oracle

    :param path: instance file of an algebra, a coalgebra or a pairing
    :param dims: largest test object dimension
    :param cap: enumeration cap of each hom-set
    """
    return oracle_instance(load(path), dims, cap)


# ------------------------------------------------------------------------------


########
# LAWS #
########


def cmd_laws(markdown: bool = False) -> str:
    """
    Index of every flag name and its display label

    :param markdown: render the LAWS.md tables instead of tab separated lines
    """
    if not markdown:
        return "\n".join(
            f"{package}\t{key}\t{label}"
            for package, laws in LAW_INDEX.items()
            for key, label in laws.items()
        )
    lines = ["# Laws", ""]
    for package, laws in LAW_INDEX.items():
        lines += [f"## {package}", "", "| flag | law |", "| --- | --- |"]
        lines += [f"| `{key}` | {label} |" for key, label in laws.items()]
        lines.append("")
    return "\n".join(lines)
