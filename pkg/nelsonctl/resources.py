# -*- coding: utf-8 -*-
"""Nelson diffusion resources."""

import math

import numpy

from nelsonctl import errors


# Largest Euler-Maruyama time step in units of 1 / omega.
MAXIMUM_TIME_STEP_FRACTION = 0.01


class OscillatorParameters(object):
  """Harmonic oscillator parameters.

  Attributes:
    diffusion (float): diffusion coefficient D = hbar / 2m.
    frequency (float): angular frequency omega.
    hbar (float): reduced Planck constant.
    mass (float): particle mass.
    sigma0 (float): ground state width.
    sigma0_squared (float): ground state variance hbar / (2 m omega).
  """

  def __init__(self, mass=1.0, hbar=1.0, frequency=1.0):
    """Initializes harmonic oscillator parameters.

    Args:
      mass (Optional[float]): particle mass.
      hbar (Optional[float]): reduced Planck constant.
      frequency (Optional[float]): angular frequency.

    Raises:
      DomainError: if a parameter is not positive.
    """
    for name, value in (
        ('mass', mass), ('hbar', hbar), ('frequency', frequency)):
      if not value > 0.0 or not math.isfinite(value):
        raise errors.DomainError(f'Unsupported {name:s}: {value!s}')

    super(OscillatorParameters, self).__init__()
    self.diffusion = hbar / (2.0 * mass)
    self.frequency = frequency
    self.hbar = hbar
    self.mass = mass
    self.sigma0_squared = self.diffusion / frequency
    self.sigma0 = math.sqrt(self.sigma0_squared)

  @classmethod
  def FromDiffusion(cls, diffusion, sigma0, mass=1.0):
    """Creates oscillator parameters from a diffusion coefficient and width.

    Args:
      diffusion (float): diffusion coefficient D.
      sigma0 (float): ground state width.
      mass (Optional[float]): particle mass.

    Returns:
      OscillatorParameters: oscillator parameters with omega = D / sigma0^2.

    Raises:
      DomainError: if a parameter is not positive.
    """
    if not diffusion > 0.0 or not sigma0 > 0.0:
      raise errors.DomainError(
          f'Unsupported diffusion: {diffusion!s} or width: {sigma0!s}')

    return cls(
        mass=mass, hbar=2.0 * mass * diffusion,
        frequency=diffusion / (sigma0 * sigma0))

  def CopyToDict(self):
    """Copies the oscillator parameters to a dictionary.

    Returns:
      dict[str, float]: dictionary containing the oscillator parameters.
    """
    return {
        'D': self.diffusion,
        'hbar': self.hbar,
        'm': self.mass,
        'omega': self.frequency,
        'sigma0': self.sigma0}


class Grid(object):
  """Uniform one dimensional grid.

  Attributes:
    lower (float): lower bound.
    number_of_points (int): number of grid points.
    points (numpy.ndarray): grid points.
    spacing (float): distance between consecutive points.
    truncated (bool): True if the grid truncates an infinite domain.
    upper (float): upper bound.
  """

  MINIMUM_NUMBER_OF_POINTS = 16

  def __init__(self, lower, upper, number_of_points, truncated=False):
    """Initializes a grid.

    Args:
      lower (float): lower bound.
      upper (float): upper bound.
      number_of_points (int): number of grid points.
      truncated (Optional[bool]): True if the grid truncates an infinite
          domain.

    Raises:
      DomainError: if the bounds or number of points are not supported.
    """
    if not lower < upper:
      raise errors.DomainError(
          f'Unsupported grid bounds: [{lower!s}, {upper!s}]')

    if number_of_points < self.MINIMUM_NUMBER_OF_POINTS:
      raise errors.DomainError(
          f'Unsupported number of grid points: {number_of_points:d}')

    super(Grid, self).__init__()
    self.lower = float(lower)
    self.number_of_points = int(number_of_points)
    self.points = numpy.linspace(lower, upper, number_of_points)
    self.spacing = (upper - lower) / (number_of_points - 1)
    self.truncated = truncated
    self.upper = float(upper)

  def GetTrapezoidWeights(self):
    """Retrieves the trapezoidal quadrature weights.

    Returns:
      numpy.ndarray: weight per grid point.
    """
    weights = numpy.full(self.number_of_points, self.spacing)
    weights[0] = weights[-1] = 0.5 * self.spacing
    return weights

  def IsEqual(self, other):
    """Determines if another grid has the same points.

    Args:
      other (Grid): other grid.

    Returns:
      bool: True if both grids have the same bounds and number of points.
    """
    return (self.lower == other.lower and self.upper == other.upper and
            self.number_of_points == other.number_of_points)

  def CopyToDict(self):
    """Copies the grid to a dictionary.

    Returns:
      dict[str, object]: dictionary containing the grid.
    """
    return {
        'lower': self.lower,
        'number_of_points': self.number_of_points,
        'truncated': self.truncated,
        'upper': self.upper}


class GridDensity(object):
  """Probability density sampled on a grid.

  Attributes:
    excluded_points (int): number of points excluded by a spectral expansion.
    grid (Grid): grid.
    node_mass_flag (bool): True if the initial density did not vanish at a
        node of the drift.
    sector_masses (list[float]): probability mass per sector.
    time (float): time of the density.
    truncation_bound (float): spectral tail bound if a spectral
        reconstruction was truncated, None otherwise.
    values (numpy.ndarray): density per grid point.
  """

  def __init__(self, grid, values, time=0.0):
    """Initializes a grid density.

    Args:
      grid (Grid): grid.
      values (numpy.ndarray): density per grid point.
      time (Optional[float]): time of the density.
    """
    super(GridDensity, self).__init__()
    self.excluded_points = 0
    self.grid = grid
    self.node_mass_flag = False
    self.sector_masses = []
    self.time = time
    self.truncation_bound = None
    self.values = numpy.asarray(values, dtype=numpy.float64)

  def Copy(self, time=None):
    """Copies the grid density.

    Args:
      time (Optional[float]): time of the copy, where None keeps the time.

    Returns:
      GridDensity: copy of the grid density.
    """
    if time is None:
      time = self.time

    grid_density = GridDensity(self.grid, self.values.copy(), time=time)
    grid_density.node_mass_flag = self.node_mass_flag
    grid_density.sector_masses = list(self.sector_masses)
    return grid_density

  def GetMass(self, lower=None, upper=None):
    """Determines the trapezoidal mass of the density on an interval.

    Args:
      lower (Optional[float]): lower bound, where None represents the lower
          bound of the grid.
      upper (Optional[float]): upper bound, where None represents the upper
          bound of the grid.

    Returns:
      float: probability mass of the grid points inside the interval.
    """
    points = self.grid.points
    in_interval = numpy.ones(points.shape, dtype=bool)
    if lower is not None:
      in_interval &= points >= lower
    if upper is not None:
      in_interval &= points <= upper

    indexes = numpy.flatnonzero(in_interval)
    if indexes.size < 2:
      return 0.0

    values = self.values[indexes[0]:indexes[-1] + 1]
    return float(numpy.sum(values[1:] + values[:-1]) * 0.5 * self.grid.spacing)


class SectorDecomposition(object):
  """Decomposition of a domain into sectors bounded by drift singularities.

  Attributes:
    breakpoints (list[float]): sorted interior singularities.
    lower_is_node (bool): True if the lower bound is a singularity.
    sectors (list[tuple[float, float]]): sector intervals.
    upper_is_node (bool): True if the upper bound is a singularity.
  """

  def __init__(
      self, breakpoints, lower, upper, lower_is_node=False,
      upper_is_node=False):
    """Initializes a sector decomposition.

    Args:
      breakpoints (list[float]): interior singularities.
      lower (float): lower bound of the domain.
      upper (float): upper bound of the domain.
      lower_is_node (Optional[bool]): True if the lower bound is a
          singularity.
      upper_is_node (Optional[bool]): True if the upper bound is a
          singularity.
    """
    super(SectorDecomposition, self).__init__()
    self.breakpoints = sorted(breakpoints)
    self.lower_is_node = lower_is_node
    self.upper_is_node = upper_is_node

    bounds = [lower] + self.breakpoints + [upper]
    self.sectors = list(zip(bounds[:-1], bounds[1:]))

  def GetIndexRanges(self, grid):
    """Determines the grid points of every sector.

    Grid points that coincide with a breakpoint belong to no sector.

    Args:
      grid (Grid): grid.

    Returns:
      list[tuple[int, int]]: first and last grid point index per sector.

    Raises:
      DomainError: if a sector contains less than 2 grid points.
    """
    tolerance = 1e-9 * grid.spacing
    points = grid.points

    index_ranges = []
    for sector_index, (lower, upper) in enumerate(self.sectors):
      in_sector = numpy.ones(points.shape, dtype=bool)
      if sector_index > 0 or self.lower_is_node:
        in_sector &= points > lower + tolerance
      if sector_index < len(self.sectors) - 1 or self.upper_is_node:
        in_sector &= points < upper - tolerance

      indexes = numpy.flatnonzero(in_sector)
      if indexes.size < 2:
        raise errors.DomainError((
            f'Grid too coarse to resolve sector: [{lower:.6g}, '
            f'{upper:.6g}]'))

      index_ranges.append((int(indexes[0]), int(indexes[-1])))

    return index_ranges

  def GetSectorIndex(self, x):
    """Determines the sector of positions.

    Args:
      x (numpy.ndarray|float): positions.

    Returns:
      numpy.ndarray|int: sector index per position.
    """
    return numpy.searchsorted(self.breakpoints, x)


class EvaluationResult(object):
  """Result of a special function evaluation.

  Attributes:
    estimated_error (float): estimate of the absolute error.
    value (float): value.
  """

  def __init__(self, value, estimated_error):
    """Initializes an evaluation result.

    Args:
      value (float): value.
      estimated_error (float): estimate of the absolute error.
    """
    super(EvaluationResult, self).__init__()
    self.estimated_error = estimated_error
    self.value = value

  def CopyToDict(self):
    """Copies the evaluation result to a dictionary.

    Returns:
      dict[str, float]: dictionary containing the evaluation result.
    """
    return {
        'estimated_error': self.estimated_error,
        'value': self.value}


class MixtureWeights(object):
  """Weights of the ground and first excited state mixture.

  Attributes:
    b_squared (float): ratio of the weights.
    beta_squared (float): ground state weight.
    gamma_squared (float): first excited state weight.
  """

  def __init__(self, beta_squared, gamma_squared, b_squared):
    """Initializes mixture weights.

    Args:
      beta_squared (float): ground state weight.
      gamma_squared (float): first excited state weight.
      b_squared (float): ratio of the weights.
    """
    super(MixtureWeights, self).__init__()
    self.b_squared = b_squared
    self.beta_squared = beta_squared
    self.gamma_squared = gamma_squared


class SturmLiouvilleProblem(object):
  """Sturm-Liouville problem of the self-adjoint Fokker-Planck operator.

  Attributes:
    diffusion (float): diffusion coefficient, the constant coefficient r(x).
    drift (DriftField): time independent drift or None.
    drift_potential (callable): potential-like coefficient q(x) implied by
        the drift, which the discretized drift operator already contains.
    lower (float): lower end of the interval.
    lower_boundary (str): boundary type at the lower end.
    potential (callable): potential-like coefficient q(x).
    upper (float): upper end of the interval.
    upper_boundary (str): boundary type at the upper end.
  """

  BOUNDARY_TYPES = frozenset(['dirichlet', 'node', 'robin'])

  def __init__(
      self, drift, diffusion, lower, upper, potential, lower_boundary,
      upper_boundary, drift_potential=None):
    """Initializes a Sturm-Liouville problem.

    Args:
      drift (DriftField): time independent drift or None.
      diffusion (float): diffusion coefficient.
      lower (float): lower end of the interval.
      upper (float): upper end of the interval.
      potential (callable): potential-like coefficient q(x).
      lower_boundary (str): boundary type at the lower end.
      upper_boundary (str): boundary type at the upper end.
      drift_potential (Optional[callable]): potential-like coefficient q(x)
          implied by the drift, where None represents the potential.

    Raises:
      DomainError: if a boundary type is not supported.
    """
    for boundary in (lower_boundary, upper_boundary):
      if boundary not in self.BOUNDARY_TYPES:
        raise errors.DomainError(f'Unsupported boundary type: {boundary!s}')

    super(SturmLiouvilleProblem, self).__init__()
    self.diffusion = diffusion
    self.drift = drift
    self.drift_potential = drift_potential or potential
    self.lower = lower
    self.lower_boundary = lower_boundary
    self.potential = potential
    self.upper = upper
    self.upper_boundary = upper_boundary


class EigenSystem(object):
  """Sturm-Liouville eigenvalues and eigenfunctions on a grid.

  Attributes:
    eigenfunctions (numpy.ndarray): trapezoid-orthonormal eigenfunctions,
        one row per eigenvalue.
    eigenvalues (numpy.ndarray): eigenvalues in ascending order.
    first_index (int): index of the first point in the grid.
    frequency (float): frequency used to scale the eigenvalues or None.
    grid (Grid): grid the problem was discretized on.
    invariant_density (numpy.ndarray): invariant density of the sector.
    last_index (int): index of the last point in the grid.
    parities (list[str]): "even" or "odd" per eigenfunction, or None if the
        sector is not symmetric.
    points (numpy.ndarray): points of the sector.
    relative_change (float): largest relative eigenvalue change under grid
        refinement or None if not checked.
    resolution_warning (bool): True if the grid does not resolve the
        eigenvalues.
    weights (numpy.ndarray): trapezoidal weights of the sector points.
  """

  def __init__(
      self, grid, first_index, last_index, weights, eigenvalues,
      eigenfunctions, frequency=None):
    """Initializes an eigen system.

    Args:
      grid (Grid): grid the problem was discretized on.
      first_index (int): index of the first point in the grid.
      last_index (int): index of the last point in the grid.
      weights (numpy.ndarray): trapezoidal weights of the sector points.
      eigenvalues (numpy.ndarray): eigenvalues in ascending order.
      eigenfunctions (numpy.ndarray): eigenfunctions, one row per eigenvalue.
      frequency (Optional[float]): frequency used to scale the eigenvalues.
    """
    super(EigenSystem, self).__init__()
    self.eigenfunctions = eigenfunctions
    self.eigenvalues = eigenvalues
    self.first_index = first_index
    self.frequency = frequency
    self.grid = grid
    self.invariant_density = eigenfunctions[0] ** 2
    self.last_index = last_index
    self.parities = None
    self.points = grid.points[first_index:last_index + 1]
    self.relative_change = None
    self.resolution_warning = False
    self.weights = weights

  def GetScaledEigenvalues(self):
    """Retrieves the adimensional eigenvalues mu = lambda / omega.

    Returns:
      numpy.ndarray: adimensional eigenvalues.

    Raises:
      DomainError: if the system has no frequency.
    """
    if not self.frequency:
      raise errors.DomainError('Missing frequency to scale eigenvalues.')

    return self.eigenvalues / self.frequency


class ExpansionCoefficients(object):
  """Coefficients of a density expanded in Sturm-Liouville eigenfunctions.

  Attributes:
    coefficients (numpy.ndarray): expansion coefficient per eigenfunction.
    excluded_points (int): number of points excluded because the invariant
        density vanishes there.
    tail_norm (float): weighted norm of the part of the expanded function
        outside the span of the eigenfunctions.
  """

  def __init__(self, coefficients, excluded_points=0, tail_norm=0.0):
    """Initializes expansion coefficients.

    Args:
      coefficients (numpy.ndarray): expansion coefficient per eigenfunction.
      excluded_points (Optional[int]): number of excluded points.
      tail_norm (Optional[float]): weighted norm of the part outside the
          span of the eigenfunctions.
    """
    super(ExpansionCoefficients, self).__init__()
    self.coefficients = coefficients
    self.excluded_points = excluded_points
    self.tail_norm = tail_norm


class ControlSchedule(object):
  """Time dependent coefficients of a quadratic controlling potential.

  The phase is S = (m/2)[Omega x^2 - 2 U x + Delta] and the potential
  V = (m/2)[omega^2 x^2 - 2 a x + c].

  Attributes:
    drift_intercept (numpy.ndarray): intercept A(t) of the linear drift.
    drift_slope (numpy.ndarray): slope B(t) of the linear drift.
    frequency_squared (numpy.ndarray): omega^2(t).
    linear_coefficient (numpy.ndarray): a(t).
    mass (float): particle mass.
    offset (numpy.ndarray): c(t).
    phase_curvature (numpy.ndarray): Omega(t).
    phase_offset (numpy.ndarray): Delta(t).
    phase_tilt (numpy.ndarray): U(t).
    times (numpy.ndarray): times.
  """

  def __init__(self, times, mass):
    """Initializes a control schedule.

    Args:
      times (numpy.ndarray): times.
      mass (float): particle mass.
    """
    times = numpy.asarray(times, dtype=numpy.float64)
    zeros = numpy.zeros(times.shape)

    super(ControlSchedule, self).__init__()
    self.drift_intercept = zeros.copy()
    self.drift_slope = zeros.copy()
    self.frequency_squared = zeros.copy()
    self.linear_coefficient = zeros.copy()
    self.mass = mass
    self.offset = zeros.copy()
    self.phase_curvature = zeros.copy()
    self.phase_offset = zeros.copy()
    self.phase_tilt = zeros.copy()
    self.times = times

  def GetPhase(self, x, index):
    """Evaluates the phase at a scheduled time.

    Args:
      x (numpy.ndarray|float): positions.
      index (int): index of the time.

    Returns:
      numpy.ndarray|float: phase S.
    """
    return 0.5 * self.mass * (
        self.phase_curvature[index] * x * x -
        2.0 * self.phase_tilt[index] * x + self.phase_offset[index])

  def GetPotential(self, x, index):
    """Evaluates the controlling potential at a scheduled time.

    Args:
      x (numpy.ndarray|float): positions.
      index (int): index of the time.

    Returns:
      numpy.ndarray|float: controlling potential V.
    """
    return 0.5 * self.mass * (
        self.frequency_squared[index] * x * x -
        2.0 * self.linear_coefficient[index] * x + self.offset[index])


class SqueezeSpecification(object):
  """Gaussian squeezing specification.

  Attributes:
    diffusion (float): diffusion coefficient D.
    mass (float): particle mass.
    ratio (float): width ratio b = sigma1 / sigma0.
    sigma0 (float): initial width.
    sigma1 (float): final width.
    time_scale (float): transition time scale tau.
  """

  def __init__(self, sigma0, ratio, time_scale, diffusion, mass=1.0):
    """Initializes a squeezing specification.

    Args:
      sigma0 (float): initial width.
      ratio (float): width ratio b = sigma1 / sigma0.
      time_scale (float): transition time scale tau.
      diffusion (float): diffusion coefficient D.
      mass (Optional[float]): particle mass.

    Raises:
      DomainError: if a parameter is not positive.
    """
    for name, value in (
        ('width', sigma0), ('width ratio', ratio), ('time scale', time_scale),
        ('diffusion', diffusion), ('mass', mass)):
      if not value > 0.0:
        raise errors.DomainError(f'Unsupported {name:s}: {value!s}')

    super(SqueezeSpecification, self).__init__()
    self.diffusion = diffusion
    self.mass = mass
    self.ratio = ratio
    self.sigma0 = sigma0
    self.sigma1 = ratio * sigma0
    self.time_scale = time_scale


class EnsembleSpecification(object):
  """Monte Carlo ensemble specification.

  Attributes:
    chunk_size (int): number of paths per work item, a multiple of 4.
    diffusion (float): diffusion coefficient D.
    frequency (float): oscillator frequency omega of the drift or None.
    grid (Grid): histogram grid.
    guard_radius (float): distance to a node below which a step is rejected.
    initial_density (GridDensity): initial density to sample from or None.
    initial_position (float): initial position of every path or None.
    number_of_paths (int): number of paths.
    number_of_workers (int): number of worker threads.
    seed (int): random number generator key.
    start_time (float): start time.
    time_step (float): Euler-Maruyama time step.
    times (list[float]): times to record histograms at.
  """

  def __init__(
      self, number_of_paths, times, time_step, diffusion, grid, seed=0,
      initial_position=None, initial_density=None, guard_radius=1e-6,
      start_time=0.0, number_of_workers=1, chunk_size=8192, frequency=None):
    """Initializes an ensemble specification.

    Args:
      number_of_paths (int): number of paths.
      times (list[float]): times to record histograms at.
      time_step (float): Euler-Maruyama time step.
      diffusion (float): diffusion coefficient D.
      grid (Grid): histogram grid.
      seed (Optional[int]): random number generator key.
      initial_position (Optional[float]): initial position of every path.
      initial_density (Optional[GridDensity]): initial density to sample
          from.
      guard_radius (Optional[float]): distance to a node below which a step
          is rejected.
      start_time (Optional[float]): start time.
      number_of_workers (Optional[int]): number of worker threads.
      chunk_size (Optional[int]): number of paths per work item.
      frequency (Optional[float]): oscillator frequency omega of the drift,
          which bounds the time step by 0.01 / omega.

    Raises:
      DomainError: if the specification is not supported.
    """
    if number_of_paths < 1:
      raise errors.DomainError(
          f'Unsupported number of paths: {number_of_paths:d}')

    if not time_step > 0.0:
      raise errors.DomainError(f'Unsupported time step: {time_step!s}')

    if frequency is not None and time_step * frequency > (
        MAXIMUM_TIME_STEP_FRACTION * (1.0 + 1e-12)):
      raise errors.DomainError(
          f'Unsupported time step: {time_step!s} exceeds '
          f'{MAXIMUM_TIME_STEP_FRACTION:g} / omega for omega: {frequency!s}')

    if diffusion < 0.0:
      raise errors.DomainError(f'Unsupported diffusion: {diffusion!s}')

    if (initial_position is None) == (initial_density is None):
      raise errors.DomainError(
          'Exactly one of initial position or initial density is required.')

    times = sorted(float(time) for time in times)
    if not times or times[0] < start_time:
      raise errors.DomainError('Unsupported times before the start time.')

    if seed < 0:
      raise errors.DomainError(f'Unsupported seed: {seed:d}')

    super(EnsembleSpecification, self).__init__()
    self.chunk_size = max(4, 4 * ((chunk_size + 3) // 4))
    self.diffusion = diffusion
    self.frequency = frequency
    self.grid = grid
    self.guard_radius = guard_radius
    self.initial_density = initial_density
    self.initial_position = initial_position
    self.number_of_paths = number_of_paths
    self.number_of_workers = max(1, number_of_workers)
    self.seed = seed
    self.start_time = start_time
    self.time_step = time_step
    self.times = times

  def CopyToDict(self):
    """Copies the ensemble specification to a dictionary.

    Returns:
      dict[str, object]: dictionary containing the ensemble specification.
    """
    return {
        'D': self.diffusion,
        'dt': self.time_step,
        'guard_radius': self.guard_radius,
        'n_paths': self.number_of_paths,
        'seed': self.seed,
        'start_time': self.start_time,
        'times': list(self.times)}


class EmpiricalDensity(object):
  """Histogram of an ensemble of paths on the cells of a grid.

  Attributes:
    counts (numpy.ndarray): number of paths per cell.
    fidelity_warning (bool): True if more than 0.1% of the steps were
        rejected.
    grid (Grid): grid, cells are centred on its points.
    halved_steps (int): number of steps retried as two half steps.
    mean (float): sample mean of the positions.
    number_of_paths (int): number of paths.
    outside_count (int): number of paths outside the cells.
    rejected_steps (int): number of rejected proposals.
    sector_masses (list[float]): fraction of paths per sector.
    time (float): time of the histogram.
    values (numpy.ndarray): normalized density per cell.
    variance (float): sample variance of the positions.
  """

  def __init__(self, grid, counts, number_of_paths, time=0.0):
    """Initializes an empirical density.

    Args:
      grid (Grid): grid, cells are centred on its points.
      counts (numpy.ndarray): number of paths per cell.
      number_of_paths (int): number of paths.
      time (Optional[float]): time of the histogram.
    """
    counts = numpy.asarray(counts, dtype=numpy.int64)

    super(EmpiricalDensity, self).__init__()
    self.counts = counts
    self.fidelity_warning = False
    self.grid = grid
    self.halved_steps = 0
    self.mean = None
    self.number_of_paths = number_of_paths
    self.outside_count = number_of_paths - int(numpy.sum(counts))
    self.rejected_steps = 0
    self.sector_masses = []
    self.time = time
    self.values = counts / (number_of_paths * grid.spacing)
    self.variance = None

  def GetCellEdges(self):
    """Retrieves the edges of the histogram cells.

    Returns:
      numpy.ndarray: cell edges.
    """
    half_spacing = 0.5 * self.grid.spacing
    return numpy.concatenate([
        self.grid.points - half_spacing, [self.grid.points[-1] + half_spacing]])

  def GetDensityFunction(self):
    """Retrieves the histogram as a piecewise constant density function.

    Returns:
      callable: density function of positions.
    """
    edges = self.GetCellEdges()
    values = self.values

    def _GetDensity(x):
      indexes = numpy.searchsorted(edges, x, side='right') - 1
      in_cells = (indexes >= 0) & (indexes < values.size)
      return numpy.where(
          in_cells, values[numpy.clip(indexes, 0, values.size - 1)], 0.0)

    return _GetDensity


class ScenarioConfiguration(object):
  """Scenario configuration.

  Attributes:
    name (str): scenario name.
    values (dict[str, object]): configuration values.
  """

  def __init__(self, name, values=None):
    """Initializes a scenario configuration.

    Args:
      name (str): scenario name.
      values (Optional[dict[str, object]]): configuration values.
    """
    super(ScenarioConfiguration, self).__init__()
    self.name = name
    self.values = dict(values or {})

  def CopyToDict(self):
    """Copies the scenario configuration to a dictionary.

    Returns:
      dict[str, object]: dictionary containing the scenario configuration.
    """
    configuration = dict(self.values)
    configuration['scenario'] = self.name
    return configuration

  def GetValue(self, key, default_value=None):
    """Retrieves a configuration value.

    Args:
      key (str): configuration key.
      default_value (Optional[object]): value if the key is not set.

    Returns:
      object: configuration value.
    """
    return self.values.get(key, default_value)
