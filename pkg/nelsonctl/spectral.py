# -*- coding: utf-8 -*-
"""Sturm-Liouville eigenproblems of the self-adjoint Fokker-Planck operator.

With rho = sqrt(h) G the Fokker-Planck equation separates into

  D G'' - q(x) G = -lambda G,  q = v^2 / 4D + v' / 2

where h is the invariant density of the sector.
"""

import logging
import math

import numpy

from scipy import linalg
from scipy import optimize

from nelsonctl import errors
from nelsonctl import fokker_planck
from nelsonctl import resources
from nelsonctl import special_functions


RESOLUTION_TOLERANCE = 0.005

TRUNCATION_TOLERANCE = 1e-10

# Adimensional bound of half-infinite sectors.
SHOOTING_BOUND = 10.0

SHOOTING_SCAN_MAXIMUM = 200.0

SHOOTING_SCAN_STEP = 0.25

SHOOTING_TOLERANCE = 1e-8

# Adimensional node positions x / sigma0 per supported level.
_SHOOTING_NODES = {
    1: (0.0,),
    2: (-1.0, 1.0)}

_SYMMETRY_TYPES = frozenset(['all', 'even', 'odd'])


def BuildSturmLiouvilleProblem(
    drift, diffusion, lower, upper, boundaries=None, potential=None):
  """Builds the Sturm-Liouville problem of a drift on an interval.

  Args:
    drift (DriftField): time independent drift or None for zero drift.
    diffusion (float): diffusion coefficient D.
    lower (float): lower end of the interval.
    upper (float): upper end of the interval.
    boundaries (Optional[tuple[str, str]]): boundary types of the lower and
        upper end, where None selects "node" for ends at a singularity of
        the drift and "robin" otherwise.
    potential (Optional[callable]): potential-like coefficient q(x), where
        None derives q from the drift.

  Returns:
    SturmLiouvilleProblem: Sturm-Liouville problem.

  Raises:
    DomainError: if the drift is time dependent or the interval or
        diffusion is not supported.
  """
  if drift is not None and drift.is_time_dependent:
    raise errors.DomainError('Unsupported time dependent drift.')

  if not diffusion > 0.0:
    raise errors.DomainError(f'Unsupported diffusion: {diffusion!s}')

  if not (math.isfinite(lower) and math.isfinite(upper) and lower < upper):
    raise errors.DomainError(
        f'Unsupported interval: [{lower!s}, {upper!s}]')

  if not boundaries:
    singularities = []
    tolerance = 1e-9 * (upper - lower)
    if drift is not None:
      singularities = drift.singularities or []

    boundaries = tuple(
        'node' if any(abs(end - singularity) <= tolerance
                      for singularity in singularities) else 'robin'
        for end in (lower, upper))

  if drift is None:
    def _GetDriftPotential(x):
      return numpy.zeros(numpy.shape(x))

  else:
    def _GetDriftPotential(x):
      velocity = drift.GetVelocity(x)
      return (velocity * velocity / (4.0 * diffusion) +
              0.5 * drift.GetVelocityDerivative(x))

  lower_boundary, upper_boundary = boundaries
  return resources.SturmLiouvilleProblem(
      drift, diffusion, lower, upper, potential or _GetDriftPotential,
      lower_boundary, upper_boundary, drift_potential=_GetDriftPotential)


def _GetFaceExponents(problem, left_points, right_points, spacing):
  """Determines the exponents w of faces between neighbouring points.

  Args:
    problem (SturmLiouvilleProblem): Sturm-Liouville problem.
    left_points (numpy.ndarray): left point of every face.
    right_points (numpy.ndarray): right point of every face.
    spacing (float): grid spacing.

  Returns:
    numpy.ndarray: exponent per face.

  Raises:
    DomainError: if the drift is not finite on the interval.
  """
  drift = problem.drift
  if drift is None:
    return numpy.zeros(left_points.shape)

  if drift.has_potential:
    differences = drift.GetPotential(right_points) - drift.GetPotential(
        left_points)
    exponents = differences / problem.diffusion
  else:
    exponents = drift.GetVelocity(
        0.5 * (left_points + right_points)) * spacing / problem.diffusion

  if not numpy.all(numpy.isfinite(exponents)):
    raise errors.DomainError('Drift not finite inside the interval.')

  return exponents


def _GetKeptIndexRange(problem, grid):
  """Determines the grid points that carry unknowns.

  Args:
    problem (SturmLiouvilleProblem): Sturm-Liouville problem.
    grid (Grid): grid.

  Returns:
    tuple[int, int]: first and last kept point index.

  Raises:
    DomainError: if the grid does not cover the interval.
  """
  tolerance = 1e-9 * grid.spacing
  points = grid.points

  if (problem.lower < grid.lower - tolerance or
      problem.upper > grid.upper + tolerance):
    raise errors.DomainError('Grid does not cover the interval.')

  indexes = numpy.flatnonzero(
      (points >= problem.lower - tolerance) &
      (points <= problem.upper + tolerance))
  first_index = int(indexes[0])
  last_index = int(indexes[-1])

  if problem.lower_boundary == 'dirichlet' and (
      abs(points[first_index] - problem.lower) > tolerance):
    raise errors.DomainError('Dirichlet end is not a grid point.')

  if problem.upper_boundary == 'dirichlet' and (
      abs(points[last_index] - problem.upper) > tolerance):
    raise errors.DomainError('Dirichlet end is not a grid point.')

  if problem.lower_boundary != 'robin' and (
      abs(points[first_index] - problem.lower) <= tolerance):
    first_index += 1

  if problem.upper_boundary != 'robin' and (
      abs(points[last_index] - problem.upper) <= tolerance):
    last_index -= 1

  return first_index, last_index


def _SolveTridiagonal(problem, grid, number_of_eigenvalues):
  """Solves the symmetric tridiagonal discretization.

  Args:
    problem (SturmLiouvilleProblem): Sturm-Liouville problem.
    grid (Grid): grid.
    number_of_eigenvalues (int): number of eigenvalues.

  Returns:
    EigenSystem: eigen system.

  Raises:
    DomainError: if too many eigenvalues are requested or the potential
        is not finite inside the interval.
  """
  first_index, last_index = _GetKeptIndexRange(problem, grid)
  number_of_points = last_index - first_index + 1
  if number_of_eigenvalues > number_of_points // 4:
    raise errors.DomainError((
        f'Unsupported number of eigenvalues: {number_of_eigenvalues:d} for '
        f'{number_of_points:d} points'))

  spacing = grid.spacing
  points = grid.points

  # Faces include the one towards a Dirichlet end.
  first_face = first_index
  if problem.lower_boundary == 'dirichlet':
    first_face -= 1
  last_face = last_index
  if problem.upper_boundary != 'dirichlet':
    last_face -= 1

  face_indexes = numpy.arange(first_face, last_face + 1)
  exponents = _GetFaceExponents(
      problem, points[face_indexes], points[face_indexes + 1], spacing)

  rate = problem.diffusion / spacing
  outflow = rate * fokker_planck.GetBernoulli(-exponents)
  inflow = rate * fokker_planck.GetBernoulli(exponents)

  weights = numpy.full(number_of_points, spacing)
  if problem.lower_boundary != 'dirichlet':
    weights[0] = 0.5 * spacing
  if problem.upper_boundary != 'dirichlet':
    weights[-1] = 0.5 * spacing

  diagonal = numpy.zeros(number_of_points)
  off_diagonal = numpy.zeros(number_of_points - 1)
  for face_index, point_index in enumerate(face_indexes):
    left = point_index - first_index
    right = left + 1
    if left >= 0:
      diagonal[left] += outflow[face_index]
    if right < number_of_points:
      diagonal[right] += inflow[face_index]
    if left >= 0 and right < number_of_points:
      off_diagonal[left] = -math.sqrt(outflow[face_index] * inflow[face_index])

  diagonal /= weights
  off_diagonal /= numpy.sqrt(weights[:-1] * weights[1:])

  kept_points = points[first_index:last_index + 1]
  if problem.drift is None:
    diagonal += problem.potential(kept_points)

  elif problem.potential is not problem.drift_potential:
    residual_potential = problem.potential(kept_points) - (
        problem.drift_potential(kept_points))
    if not numpy.all(numpy.isfinite(residual_potential)):
      raise errors.DomainError(
          'Potential not finite inside the interval.')

    diagonal += residual_potential

  eigenvalues, eigenvectors = linalg.eigh_tridiagonal(
      diagonal, off_diagonal, select='i',
      select_range=(0, number_of_eigenvalues - 1))

  eigenfunctions = eigenvectors.T / numpy.sqrt(weights)
  for eigenfunction in eigenfunctions:
    significant = numpy.flatnonzero(
        numpy.abs(eigenfunction) > 1e-8 * numpy.max(numpy.abs(eigenfunction)))
    if eigenfunction[significant[0]] < 0.0:
      eigenfunction *= -1.0

  frequency = None
  if problem.drift is not None:
    frequency = problem.drift.frequency

  eigen_system = resources.EigenSystem(
      grid, first_index, last_index, weights, eigenvalues, eigenfunctions,
      frequency=frequency)

  sector_points = eigen_system.points
  if numpy.allclose(sector_points, -sector_points[::-1], atol=1e-9 * spacing):
    eigen_system.parities = [
        'even' if numpy.linalg.norm(eigenfunction - eigenfunction[::-1]) <
        numpy.linalg.norm(eigenfunction + eigenfunction[::-1]) else 'odd'
        for eigenfunction in eigenfunctions]

  return eigen_system


def SolveEigenvaluesFiniteDifferences(
    problem, grid, number_of_eigenvalues, check_resolution=True):
  """Solves a Sturm-Liouville problem with finite differences.

  The operator is discretized with the exponentially fitted fluxes of the
  Fokker-Planck solver and symmetrized with the invariant density, which
  yields a symmetric tridiagonal matrix.

  Args:
    problem (SturmLiouvilleProblem): Sturm-Liouville problem.
    grid (Grid): grid covering the interval.
    number_of_eigenvalues (int): number of lowest eigenvalues, at most a
        quarter of the number of points.
    check_resolution (Optional[bool]): True to compare the eigenvalues
        against a grid with twice the resolution.

  Returns:
    EigenSystem: eigenvalues and trapezoid-orthonormal eigenfunctions.

  Raises:
    DomainError: if the problem cannot be discretized on the grid.
  """
  eigen_system = _SolveTridiagonal(problem, grid, number_of_eigenvalues)

  if check_resolution:
    fine_grid = resources.Grid(
        grid.lower, grid.upper, 2 * grid.number_of_points - 1,
        truncated=grid.truncated)
    fine_system = _SolveTridiagonal(problem, fine_grid, number_of_eigenvalues)

    scale = max(1.0, float(numpy.max(numpy.abs(fine_system.eigenvalues))))
    significant = numpy.abs(fine_system.eigenvalues) > 1e-8 * scale

    relative_change = 0.0
    if numpy.any(significant):
      relative_change = float(numpy.max(numpy.abs(
          eigen_system.eigenvalues[significant] -
          fine_system.eigenvalues[significant]) / numpy.abs(
              fine_system.eigenvalues[significant])))

    eigen_system.relative_change = relative_change
    if relative_change > RESOLUTION_TOLERANCE:
      logging.warning((
          f'Grid of {grid.number_of_points:d} points does not resolve the '
          f'eigenvalues, relative change: {relative_change:.3g}'))
      eigen_system.resolution_warning = True

  return eigen_system


def _GetShootingBound(value):
  """Truncates a sector bound.

  Args:
    value (float): adimensional sector bound.

  Returns:
    float: truncated sector bound.
  """
  return max(-SHOOTING_BOUND, min(SHOOTING_BOUND, value))


def _GetShootingDeterminant(level, lower, upper, symmetry, scaled_eigenvalue):
  """Evaluates the Dirichlet condition on the parabolic cylinder solutions.

  The solutions are e^{-X^2/4} M(-(mu+n)/2, 1/2; X^2/2) and
  e^{-X^2/4} X M(-(mu+n-1)/2, 3/2; X^2/2), the common Gaussian factor is
  left out.

  Args:
    level (int): oscillator level n.
    lower (float): adimensional lower bound.
    upper (float): adimensional upper bound.
    symmetry (str): "all", "even" or "odd".
    scaled_eigenvalue (float): adimensional eigenvalue mu.

  Returns:
    EvaluationResult: determinant and estimated absolute error.

  Raises:
    AccuracyError: if a hypergeometric series does not converge.
  """
  even_parameter = -0.5 * (scaled_eigenvalue + level)
  odd_parameter = -0.5 * (scaled_eigenvalue + level - 1)

  if symmetry == 'even':
    return special_functions.KummerM(even_parameter, 0.5, 0.5 * upper * upper)

  if symmetry == 'odd':
    return special_functions.KummerM(odd_parameter, 1.5, 0.5 * upper * upper)

  even_lower = special_functions.KummerM(
      even_parameter, 0.5, 0.5 * lower * lower)
  odd_lower = special_functions.KummerM(odd_parameter, 1.5, 0.5 * lower * lower)
  even_upper = special_functions.KummerM(
      even_parameter, 0.5, 0.5 * upper * upper)
  odd_upper = special_functions.KummerM(odd_parameter, 1.5, 0.5 * upper * upper)

  value = (even_lower.value * upper * odd_upper.value -
           lower * odd_lower.value * even_upper.value)
  estimated_error = abs(upper) * (
      even_lower.estimated_error * abs(odd_upper.value) +
      abs(even_lower.value) * odd_upper.estimated_error) + abs(lower) * (
          odd_lower.estimated_error * abs(even_upper.value) +
          abs(odd_lower.value) * even_upper.estimated_error)
  return resources.EvaluationResult(value, estimated_error)


def SolveEigenvaluesByShooting(
    level, sector, number_of_eigenvalues, symmetry=None):
  """Solves the oscillator sector eigenproblem exactly.

  The adimensional eigenvalues mu = lambda / omega are the roots of the
  Dirichlet condition on the sector bounds in units of sigma0. Half-infinite
  sectors are truncated at |X| = 10.

  Args:
    level (int): oscillator level n, 1 or 2.
    sector (tuple[float, float]): adimensional sector bounded by nodes or
        infinity.
    number_of_eigenvalues (int): number of eigenvalues, including mu = 0.
    symmetry (Optional[str]): "all", "even" or "odd", where None selects
        "odd" for symmetric sectors and "all" otherwise.

  Returns:
    list[float]: adimensional eigenvalues, starting with 0.0. The list is
        shorter than requested if the roots cannot be resolved.

  Raises:
    DomainError: if the level, sector or symmetry is not supported.
  """
  nodes = _SHOOTING_NODES.get(level, None)
  if not nodes:
    raise errors.DomainError(f'Unsupported level: {level!s}')

  lower, upper = sector
  for bound in (lower, upper):
    if math.isfinite(bound) and not any(
        abs(bound - node) <= 1e-12 for node in nodes):
      raise errors.DomainError(f'Sector bound: {bound!s} is not a node.')

  if not lower < upper:
    raise errors.DomainError(f'Unsupported sector: [{lower!s}, {upper!s}]')

  is_symmetric = lower == -upper
  if symmetry is None:
    symmetry = 'odd' if is_symmetric else 'all'

  if symmetry not in _SYMMETRY_TYPES:
    raise errors.DomainError(f'Unsupported symmetry: {symmetry!s}')

  if symmetry != 'all' and not is_symmetric:
    raise errors.DomainError(
        f'Unsupported symmetry: {symmetry:s} for an asymmetric sector.')

  lower = _GetShootingBound(lower)
  upper = _GetShootingBound(upper)

  def _GetDeterminant(scaled_eigenvalue):
    return _GetShootingDeterminant(
        level, lower, upper, symmetry, scaled_eigenvalue).value

  scaled_eigenvalues = [0.0]
  number_of_steps = int(round(SHOOTING_SCAN_MAXIMUM / SHOOTING_SCAN_STEP))

  previous_scaled_eigenvalue = None
  previous_value = None
  for step_index in range(1, number_of_steps + 1):
    if len(scaled_eigenvalues) >= number_of_eigenvalues:
      break

    scaled_eigenvalue = step_index * SHOOTING_SCAN_STEP
    try:
      determinant = _GetShootingDeterminant(
          level, lower, upper, symmetry, scaled_eigenvalue)
    except errors.AccuracyError as exception:
      logging.warning(f'Unable to resolve eigenvalues with: {exception!s}')
      break

    if determinant.estimated_error >= abs(determinant.value):
      logging.warning((
          f'Determinant not resolved at mu: {scaled_eigenvalue:.6g}, '
          f'estimated error: {determinant.estimated_error:.3g}'))
      break

    if previous_value is not None and previous_value * determinant.value < 0.0:
      root = optimize.bisect(
          _GetDeterminant, previous_scaled_eigenvalue, scaled_eigenvalue,
          xtol=SHOOTING_TOLERANCE)
      scaled_eigenvalues.append(root)

    previous_scaled_eigenvalue = scaled_eigenvalue
    previous_value = determinant.value

  if len(scaled_eigenvalues) < number_of_eigenvalues:
    logging.warning((
        f'Incomplete spectrum: found {len(scaled_eigenvalues):d} of '
        f'{number_of_eigenvalues:d} eigenvalues of level {level:d}'))

  return scaled_eigenvalues[:number_of_eigenvalues]


def _CheckGrid(density, system):
  """Checks that a density is defined on the grid of an eigen system.

  Args:
    density (GridDensity): density.
    system (EigenSystem): eigen system.

  Raises:
    DomainError: if the grids differ.
  """
  if not density.grid.IsEqual(system.grid):
    raise errors.DomainError('Density and eigen system grids differ.')


def Expand(density, system):
  """Expands a density in the eigenfunctions of a sector.

  Args:
    density (GridDensity): density supported in the sector.
    system (EigenSystem): eigen system.

  Returns:
    ExpansionCoefficients: coefficients c_n = int rho G_n / sqrt(h) dx.

  Raises:
    DomainError: if the density is defined on another grid.
  """
  _CheckGrid(density, system)

  values = density.values[system.first_index:system.last_index + 1]
  root_invariant_density = numpy.abs(system.eigenfunctions[0])

  included = root_invariant_density >= 1e-300
  excluded_points = int(numpy.sum(~included))
  if excluded_points:
    logging.debug(
        f'Excluded {excluded_points:d} points where the invariant density '
        f'vanishes.')

  function_values = numpy.zeros(values.shape)
  function_values[included] = (
      values[included] / root_invariant_density[included])

  coefficients = numpy.dot(
      system.eigenfunctions, system.weights * function_values)

  tail = function_values - numpy.dot(coefficients, system.eigenfunctions)
  tail_norm = math.sqrt(float(numpy.dot(system.weights, tail * tail)))

  return resources.ExpansionCoefficients(
      coefficients, excluded_points=excluded_points, tail_norm=tail_norm)


def GetSpectralDensity(system, coefficients, time):
  """Reconstructs the density from its expansion.

  Args:
    system (EigenSystem): eigen system.
    coefficients (ExpansionCoefficients): expansion coefficients.
    time (float): time since the expanded density.

  Returns:
    GridDensity: density sum_n c_n e^{-lambda_n t} sqrt(h) G_n.

  Raises:
    DomainError: if the time is negative.
  """
  if time < 0.0:
    raise errors.DomainError(f'Unsupported time: {time!s}')

  decayed = coefficients.coefficients * numpy.exp(-system.eigenvalues * time)
  root_invariant_density = numpy.abs(system.eigenfunctions[0])
  sector_values = root_invariant_density * numpy.dot(
      decayed, system.eigenfunctions)

  # Discarded modes decay no slower than the last kept mode.
  truncation_bound = coefficients.tail_norm * math.exp(
      -float(system.eigenvalues[-1]) * time)
  if truncation_bound >= TRUNCATION_TOLERANCE:
    logging.warning((
        f'Expansion truncated at {decayed.size:d} modes, tail bound: '
        f'{truncation_bound:.3g}'))

  mass = float(decayed[0])
  if numpy.min(sector_values) < -1e-12:
    sector_values = numpy.maximum(sector_values, 0.0)
    sector_mass = numpy.dot(system.weights, sector_values)
    if sector_mass > 0.0:
      sector_values *= mass / sector_mass
  else:
    sector_values = numpy.maximum(sector_values, 0.0)

  values = numpy.zeros(system.grid.number_of_points)
  values[system.first_index:system.last_index + 1] = sector_values

  grid_density = resources.GridDensity(system.grid, values, time=time)
  grid_density.excluded_points = coefficients.excluded_points
  grid_density.sector_masses = [mass]
  grid_density.truncation_bound = truncation_bound
  return grid_density
