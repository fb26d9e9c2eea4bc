# -*- coding: utf-8 -*-
"""Grid based Fokker-Planck evolution with zero-flux sector barriers.

The density is discretized with node-centred control volumes and the
exponentially fitted (Chang-Cooper) flux between neighbouring points:

  J = (D / h) [B(-w) rho_i - B(w) rho_{i+1}]

where B(w) = w / (exp(w) - 1) and w is the drift potential difference over
the face divided by D. Faces that contain a drift singularity carry no flux.
"""

import logging
import math

import numpy

from scipy import linalg
from scipy import optimize

from nelsonctl import errors
from nelsonctl import resources


CONSERVATION_TOLERANCE = 1e-6

POSITIVITY_TOLERANCE = 1e-10

QUADRATURE_TOLERANCE = 1e-4

TAIL_TOLERANCE = 1e-10


def GetBernoulli(exponents):
  """Evaluates the Bernoulli function B(w) = w / (exp(w) - 1).

  Args:
    exponents (numpy.ndarray): exponents w.

  Returns:
    numpy.ndarray: B(w), where B(0) = 1.
  """
  exponents = numpy.asarray(exponents, dtype=numpy.float64)
  values = numpy.ones(exponents.shape)
  nonzero = exponents != 0.0
  with numpy.errstate(over='ignore'):
    values[nonzero] = exponents[nonzero] / numpy.expm1(exponents[nonzero])
  return values


def GetCentralDifferences(function, value, step):
  """Approximates derivatives with 4th-order central differences.

  Args:
    function (callable): function of one argument.
    value (numpy.ndarray|float): point of evaluation.
    step (float): step.

  Returns:
    tuple[numpy.ndarray, numpy.ndarray]: first and second derivative.
  """
  value_at_point = function(value)
  forward = function(value + step)
  backward = function(value - step)
  forward2 = function(value + 2.0 * step)
  backward2 = function(value - 2.0 * step)

  first_derivative = (
      -forward2 + 8.0 * forward - 8.0 * backward + backward2) / (12.0 * step)
  second_derivative = (
      -forward2 + 16.0 * forward - 30.0 * value_at_point + 16.0 * backward -
      backward2) / (12.0 * step * step)
  return first_derivative, second_derivative


def GetTruncatedGrid(
    parameters, number_of_points, initial_position=0.0, maximum_variance=None):
  """Creates a grid truncating the real line.

  The grid covers [-L, L] with L = 8 max(sigma0, |x0|, sqrt(nu_max)).

  Args:
    parameters (OscillatorParameters): oscillator parameters.
    number_of_points (int): number of grid points.
    initial_position (Optional[float]): initial position x0.
    maximum_variance (Optional[float]): largest variance of the evolution.

  Returns:
    Grid: truncated grid.
  """
  scales = [parameters.sigma0, abs(initial_position)]
  if maximum_variance:
    scales.append(math.sqrt(maximum_variance))

  bound = 8.0 * max(scales)
  return resources.Grid(-bound, bound, number_of_points, truncated=True)


def _FindSingularities(drift, grid):
  """Detects singularities of a drift by sign changes of 1/v.

  Args:
    drift (DriftField): time independent drift.
    grid (Grid): grid.

  Returns:
    list[float]: singular points inside the grid.
  """
  points = grid.points
  with numpy.errstate(all='ignore'):
    velocities = numpy.asarray(drift.GetVelocity(points), dtype=numpy.float64)

  def _GetInverseVelocity(x):
    with numpy.errstate(all='ignore'):
      return 1.0 / float(drift.GetVelocity(x))

  singularities = []
  for index in range(points.size - 1):
    velocity = velocities[index]
    next_velocity = velocities[index + 1]
    if not math.isfinite(velocity):
      singularities.append(float(points[index]))
      continue

    if not math.isfinite(next_velocity) or velocity * next_velocity >= 0.0:
      continue

    root = optimize.bisect(
        _GetInverseVelocity, points[index], points[index + 1],
        xtol=1e-12 * grid.spacing)
    offset = 1e-6 * grid.spacing
    with numpy.errstate(all='ignore'):
      near_velocities = numpy.abs(drift.GetVelocity(
          numpy.array([root - offset, root + offset])))

    if numpy.min(near_velocities) > max(abs(velocity), abs(next_velocity)):
      singularities.append(float(root))

  if math.isfinite(velocities[-1]):
    return singularities

  return singularities + [float(points[-1])]


def SplitDomain(drift, grid):
  """Splits the grid domain into sectors bounded by drift singularities.

  Args:
    drift (DriftField): drift or None for zero drift.
    grid (Grid): grid.

  Returns:
    SectorDecomposition: sector decomposition.
  """
  if drift is None:
    singularities = []
  elif drift.singularities is not None:
    singularities = list(drift.singularities)
  else:
    singularities = _FindSingularities(drift, grid)

  tolerance = 1e-9 * grid.spacing
  lower_is_node = any(
      abs(singularity - grid.lower) <= tolerance
      for singularity in singularities)
  upper_is_node = any(
      abs(singularity - grid.upper) <= tolerance
      for singularity in singularities)
  breakpoints = [
      singularity for singularity in singularities
      if grid.lower + tolerance < singularity < grid.upper - tolerance]

  return resources.SectorDecomposition(
      breakpoints, grid.lower, grid.upper, lower_is_node=lower_is_node,
      upper_is_node=upper_is_node)


def GetSectorWeights(grid, index_ranges):
  """Determines the control volume weights of the sector points.

  Args:
    grid (Grid): grid.
    index_ranges (list[tuple[int, int]]): first and last point per sector.

  Returns:
    numpy.ndarray: weight per grid point, 0 for points outside all sectors.
  """
  weights = numpy.zeros(grid.number_of_points)
  for first_index, last_index in index_ranges:
    weights[first_index:last_index + 1] = grid.spacing
    weights[first_index] = weights[last_index] = 0.5 * grid.spacing
  return weights


def GetSectorMasses(values, grid, index_ranges):
  """Determines the probability mass per sector.

  Args:
    values (numpy.ndarray): density per grid point.
    grid (Grid): grid.
    index_ranges (list[tuple[int, int]]): first and last point per sector.

  Returns:
    list[float]: probability mass per sector.
  """
  weights = GetSectorWeights(grid, index_ranges)
  return [
      float(numpy.dot(
          weights[first_index:last_index + 1],
          values[first_index:last_index + 1]))
      for first_index, last_index in index_ranges]


def GetFaceExponents(drift, diffusion, grid, index_ranges, time=0.0):
  """Determines the exponent w of every face between neighbouring points.

  Args:
    drift (DriftField): drift or None for zero drift.
    diffusion (float): diffusion coefficient D.
    grid (Grid): grid.
    index_ranges (list[tuple[int, int]]): first and last point per sector.
    time (Optional[float]): time.

  Returns:
    tuple[numpy.ndarray, numpy.ndarray]: exponent per face and a mask of the
        faces that carry flux.

  Raises:
    DomainError: if the drift is not finite on a sector.
  """
  number_of_faces = grid.number_of_points - 1
  exponents = numpy.zeros(number_of_faces)
  active = numpy.zeros(number_of_faces, dtype=bool)
  for first_index, last_index in index_ranges:
    active[first_index:last_index] = True

  if drift is None:
    return exponents, active

  points = grid.points
  if drift.has_potential:
    potentials = numpy.full(grid.number_of_points, numpy.nan)
    for first_index, last_index in index_ranges:
      potentials[first_index:last_index + 1] = drift.GetPotential(
          points[first_index:last_index + 1], time)

    differences = potentials[1:] - potentials[:-1]
    exponents[active] = differences[active] / diffusion

  else:
    midpoints = points[:-1] + 0.5 * grid.spacing
    exponents[active] = drift.GetVelocity(
        midpoints[active], time) * grid.spacing / diffusion

  if not numpy.all(numpy.isfinite(exponents[active])):
    raise errors.DomainError(
        f'Drift not finite inside a sector at time: {time:.12g}')

  return exponents, active


def _AssembleOperator(drift, diffusion, grid, index_ranges, time):
  """Assembles the tridiagonal flux operator A with W drho/dt = A rho.

  Args:
    drift (DriftField): drift or None for zero drift.
    diffusion (float): diffusion coefficient D.
    grid (Grid): grid.
    index_ranges (list[tuple[int, int]]): first and last point per sector.
    time (float): time.

  Returns:
    tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]: main, lower and upper
        diagonal.
  """
  exponents, active = GetFaceExponents(
      drift, diffusion, grid, index_ranges, time=time)

  rate = diffusion / grid.spacing
  outflow = numpy.where(active, rate * GetBernoulli(-exponents), 0.0)
  inflow = numpy.where(active, rate * GetBernoulli(exponents), 0.0)

  main = numpy.zeros(grid.number_of_points)
  main[:-1] -= outflow
  main[1:] -= inflow
  return main, outflow, inflow


def _Multiply(operator, values):
  """Multiplies a tridiagonal operator with a vector.

  Args:
    operator (tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]): main,
        lower and upper diagonal.
    values (numpy.ndarray): vector.

  Returns:
    numpy.ndarray: product.
  """
  main, lower, upper = operator
  product = main * values
  product[:-1] += upper * values[1:]
  product[1:] += lower * values[:-1]
  return product


def CreateGridDensity(grid, function, time=0.0):
  """Samples and normalizes a density function on a grid.

  Args:
    grid (Grid): grid.
    function (callable): density function of position.
    time (Optional[float]): time of the density.

  Returns:
    GridDensity: normalized grid density.

  Raises:
    DomainError: if the sampled density is negative, not finite or has no
        mass.
  """
  values = numpy.asarray(function(grid.points), dtype=numpy.float64)
  if not numpy.all(numpy.isfinite(values)) or numpy.any(values < 0.0):
    raise errors.DomainError('Unsupported density: negative or not finite.')

  grid_density = resources.GridDensity(grid, values, time=time)
  mass = grid_density.GetMass()
  if not mass > 0.0:
    raise errors.DomainError('Unsupported density: no mass on the grid.')

  grid_density.values = values / mass
  grid_density.sector_masses = [1.0]
  return grid_density


def CreateDeltaDensity(grid, position, time=0.0):
  """Creates the hat function representation of a delta density.

  Args:
    grid (Grid): grid.
    position (float): position of the delta.
    time (Optional[float]): time of the density.

  Returns:
    GridDensity: density with unit mass on the cell containing the position.

  Raises:
    DomainError: if the position is outside the grid.
  """
  if not grid.lower <= position <= grid.upper:
    raise errors.DomainError(f'Position outside the grid: {position:.12g}')

  fraction, index = math.modf((position - grid.lower) / grid.spacing)
  index = int(index)
  if index >= grid.number_of_points - 1:
    index = grid.number_of_points - 2
    fraction = 1.0

  weights = grid.GetTrapezoidWeights()
  values = numpy.zeros(grid.number_of_points)
  values[index] = (1.0 - fraction) / weights[index]
  values[index + 1] += fraction / weights[index + 1]

  grid_density = resources.GridDensity(grid, values, time=time)
  grid_density.sector_masses = [1.0]
  return grid_density


def GetMassFraction(density, lower=None, upper=None):
  """Determines the fraction of the mass of a density on an interval.

  Args:
    density (GridDensity): density.
    lower (Optional[float]): lower bound.
    upper (Optional[float]): upper bound.

  Returns:
    float: mass on the interval divided by the total mass.
  """
  return density.GetMass(lower=lower, upper=upper) / density.GetMass()


def GetInvariantDensity(drift, diffusion, grid):
  """Determines the invariant density h = exp(int v / D) on a grid.

  Args:
    drift (DriftField): time independent drift or None for zero drift.
    diffusion (float): diffusion coefficient D.
    grid (Grid): grid of a single sector.

  Returns:
    GridDensity: normalized invariant density.

  Raises:
    DomainError: if the drift is time dependent, the grid spans several
        sectors or the density is not normalizable.
  """
  if drift is not None and drift.is_time_dependent:
    raise errors.DomainError('Unsupported time dependent drift.')

  if not diffusion > 0.0:
    raise errors.DomainError(f'Unsupported diffusion: {diffusion!s}')

  sectors = SplitDomain(drift, grid)
  index_ranges = sectors.GetIndexRanges(grid)
  if len(index_ranges) != 1:
    raise errors.DomainError((
        f'Grid spans {len(index_ranges):d} sectors, restrict it to a single '
        f'sector.'))

  exponents, _ = GetFaceExponents(drift, diffusion, grid, index_ranges)

  first_index, last_index = index_ranges[0]
  log_values = numpy.concatenate([
      [0.0], numpy.cumsum(exponents[first_index:last_index])])
  log_values -= numpy.max(log_values)

  values = numpy.zeros(grid.number_of_points)
  values[first_index:last_index + 1] = numpy.exp(log_values)
  if not numpy.all(numpy.isfinite(values)):
    raise errors.DomainError('Invariant density is not finite.')

  if grid.truncated:
    tail = max(values[first_index], values[last_index])
    if tail > TAIL_TOLERANCE * numpy.max(values):
      raise errors.DomainError((
          f'Invariant density is not normalizable, tail value: '
          f'{tail:.3g}'))

  weights = GetSectorWeights(grid, index_ranges)
  values /= numpy.dot(weights, values)

  grid_density = resources.GridDensity(grid, values)
  grid_density.sector_masses = [1.0]
  return grid_density


def _GetTimeStepBound(drift, diffusion, grid, weights, operator):
  """Determines the largest stable Crank-Nicolson time step.

  Args:
    drift (DriftField): drift or None for zero drift.
    diffusion (float): diffusion coefficient D.
    grid (Grid): grid.
    weights (numpy.ndarray): control volume weights.
    operator (tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]): flux
        operator.

  Returns:
    float: time step bound.
  """
  bounds = [grid.spacing * grid.spacing / (2.0 * diffusion)]
  if drift is not None and drift.frequency:
    bounds.append(0.05 / drift.frequency)

  outflow = -operator[0]
  has_outflow = outflow > 0.0
  if numpy.any(has_outflow):
    bounds.append(float(numpy.min(
        2.0 * weights[has_outflow] / outflow[has_outflow])))

  return min(bounds)


def _GetIntervalTimeStep(
    drift, diffusion, grid, index_ranges, weights, operator, end_time):
  """Determines the largest stable time step of an output interval.

  Args:
    drift (DriftField): drift or None for zero drift.
    diffusion (float): diffusion coefficient D.
    grid (Grid): grid.
    index_ranges (list[tuple[int, int]]): first and last index per sector.
    weights (numpy.ndarray): control volume weights.
    operator (tuple[numpy.ndarray, numpy.ndarray, numpy.ndarray]): flux
        operator at the start of the interval.
    end_time (float): end of the interval.

  Returns:
    float: time step bound.
  """
  bound = _GetTimeStepBound(drift, diffusion, grid, weights, operator)
  if drift is not None and drift.is_time_dependent:
    end_operator = _AssembleOperator(
        drift, diffusion, grid, index_ranges, end_time)
    bound = min(bound, _GetTimeStepBound(
        drift, diffusion, grid, weights, end_operator))

  return bound


def EvolveDensity(drift, diffusion, density, times, time_step=None):
  """Evolves a density with Crank-Nicolson time stepping.

  Args:
    drift (DriftField): drift or None for zero drift.
    diffusion (float): diffusion coefficient D.
    density (GridDensity): initial density.
    times (list[float]): increasing times to return the density at.
    time_step (Optional[float]): largest time step, where None uses the
        stability bound.

  Returns:
    list[GridDensity]: density per requested time.

  Raises:
    ConservationError: if the mass of a sector is not conserved.
    DomainError: if the diffusion or times are not supported.
    PositivityError: if the density becomes negative.
  """
  if not diffusion > 0.0:
    raise errors.DomainError(f'Unsupported diffusion: {diffusion!s}')

  grid = density.grid
  sectors = SplitDomain(drift, grid)
  index_ranges = sectors.GetIndexRanges(grid)

  weights = GetSectorWeights(grid, index_ranges)
  isolated = weights == 0.0
  solve_weights = numpy.where(isolated, 1.0, weights)

  values = density.values.copy()
  node_mass_flag = density.node_mass_flag
  if numpy.any(isolated):
    node_mass = numpy.max(numpy.abs(values[isolated]))
    if node_mass > 1e-12 * numpy.max(numpy.abs(values)):
      logging.warning((
          f'Initial density does not vanish at a node: {node_mass:.3g}, '
          f'the mass is kept at the node.'))
      node_mass_flag = True

  initial_masses = GetSectorMasses(values, grid, index_ranges)
  is_time_dependent = drift is not None and drift.is_time_dependent

  current_time = density.time
  operator = _AssembleOperator(
      drift, diffusion, grid, index_ranges, current_time)

  maximum_time_step = None
  grid_densities = []
  for target_time in times:
    if target_time < current_time:
      raise errors.DomainError(
          f'Unsupported time: {target_time:.12g} before {current_time:.12g}')

    if is_time_dependent or maximum_time_step is None:
      maximum_time_step = _GetIntervalTimeStep(
          drift, diffusion, grid, index_ranges, solve_weights, operator,
          target_time)
      if time_step:
        maximum_time_step = min(maximum_time_step, time_step)

    number_of_steps = int(math.ceil(
        (target_time - current_time) / maximum_time_step - 1e-9))
    if number_of_steps > 0:
      step = (target_time - current_time) / number_of_steps
      start_time = current_time

      banded_matrix = None
      for step_index in range(number_of_steps):
        next_time = start_time + (step_index + 1) * step
        if is_time_dependent or banded_matrix is None:
          next_operator = operator
          if is_time_dependent:
            next_operator = _AssembleOperator(
                drift, diffusion, grid, index_ranges, next_time)

          main, lower, upper = next_operator
          banded_matrix = numpy.zeros((3, grid.number_of_points))
          banded_matrix[0, 1:] = -0.5 * step * upper
          banded_matrix[1] = solve_weights - 0.5 * step * main
          banded_matrix[2, :-1] = -0.5 * step * lower

        right_hand_side = solve_weights * values + 0.5 * step * _Multiply(
            operator, values)
        values = linalg.solve_banded(
            (1, 1), banded_matrix, right_hand_side, check_finite=False)

        minimum = numpy.min(values)
        if minimum < -POSITIVITY_TOLERANCE:
          raise errors.PositivityError((
              f'Density became negative: {minimum:.3g} at time: '
              f'{next_time:.12g}'))

        operator = next_operator

    current_time = target_time

    sector_masses = GetSectorMasses(values, grid, index_ranges)
    for sector_index, (mass, initial_mass) in enumerate(zip(
        sector_masses, initial_masses)):
      if abs(mass - initial_mass) > CONSERVATION_TOLERANCE:
        raise errors.ConservationError((
            f'Mass of sector: {sector_index:d} changed from '
            f'{initial_mass:.12g} to {mass:.12g}'))

    grid_density = resources.GridDensity(
        grid, values.copy(), time=target_time)
    grid_density.node_mass_flag = node_mass_flag
    grid_density.sector_masses = sector_masses
    grid_densities.append(grid_density)

  return grid_densities


def Propagate(kernel, density, time, start_time=None):
  """Propagates a density with a transition kernel (Chapman-Kolmogorov).

  Args:
    kernel (object): transition kernel with GetDensity(x, t, x0, t0).
    density (GridDensity): input density.
    time (float): time to propagate to.
    start_time (Optional[float]): time of the input density, where None
        uses the time of the density.

  Returns:
    GridDensity: propagated density.

  Raises:
    DomainError: if the time precedes the start time.
    QuadratureError: if the quadrature does not conserve the mass.
  """
  if start_time is None:
    start_time = density.time

  if time < start_time:
    raise errors.DomainError(
        f'Unsupported time: {time:.12g} before {start_time:.12g}')

  if time == start_time:
    return density.Copy(time=time)

  grid = density.grid
  masses = grid.GetTrapezoidWeights() * density.values
  columns = numpy.flatnonzero(masses)

  points = grid.points
  kernel_values = kernel.GetDensity(
      points[:, numpy.newaxis], time, points[numpy.newaxis, columns],
      start_time)
  values = numpy.dot(kernel_values, masses[columns])

  grid_density = resources.GridDensity(grid, values, time=time)

  input_mass = float(numpy.sum(masses))
  output_mass = grid_density.GetMass()
  if abs(output_mass - input_mass) > QUADRATURE_TOLERANCE:
    raise errors.QuadratureError((
        f'Propagated mass: {output_mass:.12g} differs from input mass: '
        f'{input_mass:.12g}'))

  grid_density.sector_masses = [output_mass]
  return grid_density


def GetFokkerPlanckResidual(
    density_function, velocity_function, diffusion, positions, times,
    length_step, time_step):
  """Determines the residual of the forward Fokker-Planck equation.

  The residual d(rho)/dt + d(v rho)/dx - D d^2(rho)/dx^2 is approximated with
  4th-order central differences.

  Args:
    density_function (callable): density function of position and time.
    velocity_function (callable): drift function of position and time.
    diffusion (float): diffusion coefficient D.
    positions (numpy.ndarray): positions.
    times (list[float]): times.
    length_step (float): position step.
    time_step (float): time step.

  Returns:
    float: largest absolute residual.
  """
  positions = numpy.asarray(positions, dtype=numpy.float64)

  maximum_residual = 0.0
  for time in times:
    time_derivative, _ = GetCentralDifferences(
        lambda t: density_function(positions, t), time, time_step)

    flux_derivative, _ = GetCentralDifferences(
        lambda x: velocity_function(x, time) * density_function(x, time),
        positions, length_step)

    _, second_derivative = GetCentralDifferences(
        lambda x: density_function(x, time), positions, length_step)

    residual = time_derivative + flux_derivative - diffusion * second_derivative
    maximum_residual = max(
        maximum_residual, float(numpy.max(numpy.abs(residual))))

  return maximum_residual
