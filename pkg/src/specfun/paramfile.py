#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Fox-H Parameter Files

Plain-text description of one H-function evaluation, read by the hidden
`specfun-eval` command. One parameter tuple per line:

    <name> <value> [<value> ...]     # trailing comments allowed

Univariate keys:  upper a A | lower b B | m k | n k | z value
Bivariate keys:   var1_upper, var1_lower, var2_upper, var2_lower (pairs),
                  joint_upper, joint_lower (c C1 C2), m1, n1, m2, n2, x, y
Contour keys:     anchor1, anchor2, half_height, nodes, tolerance, max_refinements

Group keys may repeat; each occurrence appends one tuple.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Tuple, Union

from .contour import ContourSettings
from .foxh import FoxHBivariateParams, FoxHUnivariateParams, evaluate_bivariate, evaluate_univariate, ContourResult

logger = logging.getLogger(__name__)

PAIR_GROUPS = {'upper', 'lower', 'var1_upper', 'var1_lower', 'var2_upper', 'var2_lower'}
TRIPLE_GROUPS = {'joint_upper', 'joint_lower'}
INDEX_KEYS = {'m', 'n', 'm1', 'n1', 'm2', 'n2'}
ARGUMENT_KEYS = {'z', 'x', 'y'}
CONTOUR_FLOATS = {'anchor1', 'anchor2', 'half_height', 'tolerance'}
CONTOUR_INTS = {'nodes', 'max_refinements'}
BIVARIATE_MARKERS = {'var1_upper', 'var1_lower', 'var2_upper', 'var2_lower',
                     'joint_upper', 'joint_lower', 'm1', 'n1', 'm2', 'n2', 'x', 'y'}


@dataclass
class ParameterFile:
    """Parsed evaluation request"""
    params: Union[FoxHUnivariateParams, FoxHBivariateParams]
    arguments: Tuple[float, ...]
    contour: ContourSettings

    @property
    def is_bivariate(self) -> bool:
        return isinstance(self.params, FoxHBivariateParams)

    def evaluate(self) -> ContourResult:
        if self.is_bivariate:
            return evaluate_bivariate(self.params, *self.arguments, contour=self.contour)
        return evaluate_univariate(self.params, *self.arguments, contour=self.contour)


def _parse_lines(text: str, source: str) -> Tuple[Dict[str, List[Tuple[float, ...]]], Dict[str, str]]:
    groups: Dict[str, List[Tuple[float, ...]]] = {}
    scalars: Dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        name, *values = line.replace(',', ' ').split()
        name = name.lower()
        if name in PAIR_GROUPS or name in TRIPLE_GROUPS:
            width = 2 if name in PAIR_GROUPS else 3
            if len(values) != width:
                raise ValueError(f"{source}:{number}: {name} expects {width} numbers, got {len(values)}")
            groups.setdefault(name, []).append(tuple(float(v) for v in values))
        elif name in INDEX_KEYS | ARGUMENT_KEYS | CONTOUR_FLOATS | CONTOUR_INTS:
            if len(values) != 1:
                raise ValueError(f"{source}:{number}: {name} expects one value")
            if name in scalars:
                raise ValueError(f"{source}:{number}: {name} given twice")
            scalars[name] = values[0]
        else:
            raise ValueError(f"{source}:{number}: unknown key {name!r}")
    return groups, scalars


def parse_parameter_text(text: str, source: str = '<text>') -> ParameterFile:
    """
    Parse a parameter description.

    Args:
        text: File contents
        source: Name used in error messages

    Returns:
        ParameterFile ready to evaluate
    """
    groups, scalars = _parse_lines(text, source)

    contour_args = {key: float(scalars[key]) for key in CONTOUR_FLOATS if key in scalars}
    contour_args.update({key: int(scalars[key]) for key in CONTOUR_INTS if key in scalars})
    contour = ContourSettings(**contour_args)

    if BIVARIATE_MARKERS & (set(groups) | set(scalars)):
        if 'x' not in scalars or 'y' not in scalars:
            raise ValueError(f"{source}: bivariate evaluation needs both x and y")
        params = FoxHBivariateParams(
            joint_upper=groups.get('joint_upper', []),
            joint_lower=groups.get('joint_lower', []),
            var1_upper=groups.get('var1_upper', []),
            var1_lower=groups.get('var1_lower', []),
            var2_upper=groups.get('var2_upper', []),
            var2_lower=groups.get('var2_lower', []),
            m1=int(scalars.get('m1', 0)),
            n1=int(scalars.get('n1', 0)),
            m2=int(scalars.get('m2', 0)),
            n2=int(scalars.get('n2', 0)),
        )
        arguments = (float(scalars['x']), float(scalars['y']))
    else:
        if 'z' not in scalars:
            raise ValueError(f"{source}: univariate evaluation needs z")
        params = FoxHUnivariateParams(
            upper_params=groups.get('upper', []),
            lower_params=groups.get('lower', []),
            m=int(scalars.get('m', 0)),
            n=int(scalars.get('n', 0)),
        )
        arguments = (float(scalars['z']),)

    return ParameterFile(params=params, arguments=arguments, contour=contour)


def load_parameter_file(path: str) -> ParameterFile:
    """Read and parse a parameter file from disk"""
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Parameter file not found: {path}")
    logger.debug(f"Reading Fox-H parameters from {file_path}")
    return parse_parameter_text(file_path.read_text(encoding='utf-8'), str(file_path))
