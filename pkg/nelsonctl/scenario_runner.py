# -*- coding: utf-8 -*-
"""Runner of named scenarios."""

import logging
import math
import os

import numpy

from nelsonctl import controlling_potentials
from nelsonctl import definitions
from nelsonctl import drifts
from nelsonctl import ensemble_simulator
from nelsonctl import errors
from nelsonctl import flows
from nelsonctl import fokker_planck
from nelsonctl import output_writer
from nelsonctl import resources
from nelsonctl import spectral
from nelsonctl import states
from nelsonctl import transition_kernels
from nelsonctl import yaml_scenarios_file


class ScenarioRunner(object):
  """Runner of named scenarios.

  A scenario configuration is completed with the packaged defaults of the
  scenario, validated and then run. Every run writes its tables and a
  manifest to the output directory.
  """

  _CONSISTENCY_TOLERANCE = 1e-12

  _DEFAULT_NUMBER_OF_MODES = 32

  _DEFAULTS_PATH = os.path.join(
      os.path.dirname(__file__), 'data', 'scenarios.yaml')

  _CONTROL_FLOW_KEYS = {
      definitions.FLOW_COHERENT: ('a',),
      definitions.FLOW_DECAY: (),
      definitions.FLOW_EXCITED: ('x0',),
      definitions.FLOW_ORNSTEIN_UHLENBECK: ('x0',),
      definitions.FLOW_SQUEEZE: ('b', 'tau'),
      definitions.FLOW_STATIONARY: ('level',),
      definitions.FLOW_TRANSITION: ('a', 'N', 'tau')}

  _EVOLVE_FLOWS = frozenset([
      definitions.FLOW_EXCITED,
      definitions.FLOW_ORNSTEIN_UHLENBECK,
      definitions.FLOW_STATIONARY])

  _REQUIRED_KEYS = {
      definitions.SCENARIO_COHERENT: (
          'N', 'a', 'n_points', 'n_samples', 't_end', 't_start', 'tau'),
      definitions.SCENARIO_CONTROL: (
          'flow', 'n_points', 'n_samples', 't_end', 't_start'),
      definitions.SCENARIO_DECAY: (
          'n_points', 'n_samples', 't_end', 't_start'),
      definitions.SCENARIO_EIGENVALUES: (
          'level', 'method', 'n_eigenvalues', 'sector'),
      definitions.SCENARIO_EVOLVE: (
          'flow', 'level', 'method', 'n_points', 'n_samples', 't_end',
          't_start'),
      definitions.SCENARIO_KERNEL: (
          'kernel', 'n_points', 'n_samples', 't_end', 't_start', 'x0'),
      definitions.SCENARIO_SIMULATE: (
          'dt', 'flow', 'n_paths', 'n_points', 'n_samples', 'seed', 't_end',
          't_start', 'x0'),
      definitions.SCENARIO_SQUEEZE: (
          'b', 'n_samples', 't_end', 't_start', 'tau')}

  _SIMULATE_FLOWS = frozenset([
      definitions.FLOW_EXCITED,
      definitions.FLOW_ORNSTEIN_UHLENBECK])

  def __init__(self, defaults_path=None):
    """Initializes a scenario runner.

    Args:
      defaults_path (Optional[str]): path of the scenario defaults file,
          where None represents the packaged defaults.
    """
    super(ScenarioRunner, self).__init__()
    self._defaults = {}

    scenarios_file = yaml_scenarios_file.YAMLScenariosFile()
    for configuration in scenarios_file.ReadFromFile(
        defaults_path or self._DEFAULTS_PATH):
      self._defaults[configuration.name] = configuration.values

  def _CheckFlowTimes(self, flow, start_time):
    """Checks that the times of a flow follow its start at t = 0.

    Args:
      flow (str): flow name.
      start_time (float): first time of the scenario.

    Raises:
      ConfigurationError: if the flow is not defined at the start time.
    """
    if flow in (
        definitions.FLOW_DECAY, definitions.FLOW_EXCITED,
        definitions.FLOW_ORNSTEIN_UHLENBECK) and not start_time > 0.0:
      raise errors.ConfigurationError(
          f'Invalid value of: t_start expected a positive time for flow: '
          f'{flow:s}')

    if flow in (
        definitions.FLOW_COHERENT,
        definitions.FLOW_TRANSITION) and start_time < 0.0:
      raise errors.ConfigurationError(
          f'Invalid value of: t_start expected a time not before 0 for flow: '
          f'{flow:s}')

  def _CreateFlow(self, configuration, parameters):
    """Creates the flow of a control scenario.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.
      parameters (OscillatorParameters): oscillator parameters.

    Returns:
      FlowPair: flow.
    """
    flow = configuration.GetValue('flow')
    if flow == definitions.FLOW_COHERENT:
      return flows.CoherentStateFlow(configuration.GetValue('a'), parameters)

    if flow == definitions.FLOW_DECAY:
      return flows.DecayFlow(parameters)

    if flow == definitions.FLOW_EXCITED:
      return flows.ExcitedStateFlow(configuration.GetValue('x0'), parameters)

    if flow == definitions.FLOW_ORNSTEIN_UHLENBECK:
      return flows.OrnsteinUhlenbeckFlow(
          configuration.GetValue('x0'), parameters)

    if flow == definitions.FLOW_SQUEEZE:
      return flows.SqueezeFlow(
          self._GetSqueezeSpecification(configuration, parameters))

    if flow == definitions.FLOW_TRANSITION:
      return flows.CoherentTransitionFlow(
          configuration.GetValue('a'), configuration.GetValue('N'),
          configuration.GetValue('tau'), parameters)

    return flows.StationaryFlow(configuration.GetValue('level'), parameters)

  def _GetGrid(self, configuration, parameters, initial_position=0.0):
    """Creates the grid of a scenario.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.
      parameters (OscillatorParameters): oscillator parameters.
      initial_position (Optional[float]): initial position.

    Returns:
      Grid: grid over [-L sigma0, L sigma0] if L is set, or the default
          truncation of the real line otherwise.
    """
    number_of_points = configuration.GetValue('n_points')
    half_width = configuration.GetValue('L')
    if half_width is None:
      return fokker_planck.GetTruncatedGrid(
          parameters, number_of_points, initial_position=initial_position)

    bound = half_width * parameters.sigma0
    return resources.Grid(-bound, bound, number_of_points, truncated=True)

  def _GetParameters(self, configuration):
    """Determines the oscillator parameters of a scenario.

    D follows from hbar or D, or from sigma0 and omega, where hbar defaults
    to 1. Omega follows from omega, or from sigma0 and D, where it defaults
    to 1.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.

    Returns:
      OscillatorParameters: oscillator parameters.

    Raises:
      ConfigurationError: if the values are not consistent.
    """
    mass = configuration.GetValue('m', 1.0)
    hbar = configuration.GetValue('hbar')
    diffusion = configuration.GetValue('D')
    frequency = configuration.GetValue('omega')
    sigma0 = configuration.GetValue('sigma0')

    if hbar is not None and diffusion is not None:
      expected_diffusion = hbar / (2.0 * mass)
      if not self._IsConsistent(diffusion, expected_diffusion):
        raise errors.ConfigurationError((
            f'Inconsistent value of: D: {diffusion!s} expected hbar / 2m: '
            f'{expected_diffusion!s}'))

    if diffusion is None:
      if hbar is not None:
        diffusion = hbar / (2.0 * mass)
      elif sigma0 is not None and frequency is not None:
        diffusion = sigma0 * sigma0 * frequency
      else:
        diffusion = 1.0 / (2.0 * mass)

    if frequency is None:
      frequency = 1.0
      if sigma0 is not None:
        frequency = diffusion / (sigma0 * sigma0)

    elif sigma0 is not None:
      expected_diffusion = sigma0 * sigma0 * frequency
      if not self._IsConsistent(diffusion, expected_diffusion):
        raise errors.ConfigurationError((
            f'Inconsistent value of: sigma0: {sigma0!s} expected D = '
            f'sigma0^2 omega: {diffusion!s}'))

    return resources.OscillatorParameters(
        mass=mass, hbar=2.0 * mass * diffusion, frequency=frequency)

  def _GetSqueezeSpecification(self, configuration, parameters):
    """Creates the squeezing specification of a scenario.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.
      parameters (OscillatorParameters): oscillator parameters.

    Returns:
      SqueezeSpecification: squeezing specification.
    """
    return resources.SqueezeSpecification(
        parameters.sigma0, configuration.GetValue('b'),
        configuration.GetValue('tau'), parameters.diffusion,
        mass=parameters.mass)

  def _GetTimes(self, configuration):
    """Determines the sample times of a scenario.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.

    Returns:
      numpy.ndarray: equidistant times from t_start to t_end.
    """
    return numpy.linspace(
        configuration.GetValue('t_start'), configuration.GetValue('t_end'),
        configuration.GetValue('n_samples'))

  def _IsConsistent(self, value, expected_value):
    """Determines if a value matches its expected value.

    Args:
      value (float): value.
      expected_value (float): expected value.

    Returns:
      bool: True if the relative difference is within the tolerance.
    """
    return abs(value - expected_value) <= self._CONSISTENCY_TOLERANCE * max(
        abs(value), abs(expected_value))

  def _MergeDefaults(self, configuration):
    """Completes a scenario configuration with the defaults of the scenario.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.

    Returns:
      ScenarioConfiguration: completed scenario configuration.
    """
    values = dict(self._defaults.get(configuration.name, {}))
    values.update(configuration.values)
    return resources.ScenarioConfiguration(configuration.name, values=values)

  def _ValidateConfiguration(self, configuration):
    """Validates a completed scenario configuration.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.

    Returns:
      OscillatorParameters: oscillator parameters.

    Raises:
      ConfigurationError: if the scenario configuration is not valid.
    """
    name = configuration.name
    for key in self._REQUIRED_KEYS[name]:
      if configuration.GetValue(key) is None:
        raise errors.ConfigurationError(
            f'Missing value of: {key:s} for scenario: {name:s}')

    parameters = self._GetParameters(configuration)

    start_time = configuration.GetValue('t_start')
    end_time = configuration.GetValue('t_end')
    if start_time is not None and end_time is not None and (
        end_time < start_time):
      raise errors.ConfigurationError(
          f'Invalid value of: t_end: {end_time!s} before t_start: '
          f'{start_time!s}')

    flow = configuration.GetValue('flow')
    method = configuration.GetValue('method')

    if name == definitions.SCENARIO_EIGENVALUES:
      self._ValidateEigenvaluesConfiguration(configuration)

    elif name == definitions.SCENARIO_EVOLVE:
      if flow not in self._EVOLVE_FLOWS:
        raise errors.ConfigurationError(
            f'Unsupported value of: flow: {flow:s} for scenario: evolve')

      if method not in (
          definitions.METHOD_GRID, definitions.METHOD_SPECTRAL):
        raise errors.ConfigurationError(
            f'Unsupported value of: method: {method:s} for scenario: evolve')

      if method == definitions.METHOD_SPECTRAL and (
          configuration.GetValue('level') != 0):
        raise errors.ConfigurationError(
            'Unsupported value of: level expected 0 for method: spectral')

      if flow == definitions.FLOW_ORNSTEIN_UHLENBECK and (
          configuration.GetValue('x0') is None):
        raise errors.ConfigurationError(
            'Missing value of: x0 for flow: ou')

    elif name == definitions.SCENARIO_KERNEL:
      if not start_time > 0.0:
        raise errors.ConfigurationError(
            'Invalid value of: t_start expected a positive time for scenario: '
            'kernel')

      if configuration.GetValue('kernel') == definitions.FLOW_EXCITED and (
          configuration.GetValue('x0') == 0.0):
        raise errors.ConfigurationError(
            'Invalid value of: x0 expected a position off the node for '
            'kernel: excited')

    elif name == definitions.SCENARIO_CONTROL:
      for key in self._CONTROL_FLOW_KEYS[flow]:
        if configuration.GetValue(key) is None:
          raise errors.ConfigurationError(
              f'Missing value of: {key:s} for flow: {flow:s}')

      self._CheckFlowTimes(flow, start_time)

    elif name in (definitions.SCENARIO_COHERENT, definitions.SCENARIO_DECAY):
      if start_time < 0.0:
        raise errors.ConfigurationError(
            f'Invalid value of: t_start expected a time not before 0 for '
            f'scenario: {name:s}')

    elif name == definitions.SCENARIO_SIMULATE:
      if flow not in self._SIMULATE_FLOWS:
        raise errors.ConfigurationError(
            f'Unsupported value of: flow: {flow:s} for scenario: simulate')

      self._CheckFlowTimes(flow, start_time)

      time_step = configuration.GetValue('dt')
      maximum_time_step = (
          resources.MAXIMUM_TIME_STEP_FRACTION / parameters.frequency)
      if time_step > maximum_time_step * (1.0 + 1e-12):
        raise errors.ConfigurationError(
            f'Invalid value of: dt: {time_step!s} expected at most: '
            f'{maximum_time_step:.6g}')

    return parameters

  def _ValidateEigenvaluesConfiguration(self, configuration):
    """Validates a completed eigenvalues scenario configuration.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.

    Raises:
      ConfigurationError: if the scenario configuration is not valid.
    """
    level = configuration.GetValue('level')
    method = configuration.GetValue('method')
    lower, upper = configuration.GetValue('sector')

    if method not in (
        definitions.METHOD_BOTH, definitions.METHOD_FINITE_DIFFERENCES,
        definitions.METHOD_SHOOTING):
      raise errors.ConfigurationError(
          f'Unsupported value of: method: {method:s} for scenario: eigs')

    if method != definitions.METHOD_FINITE_DIFFERENCES and level not in (1, 2):
      raise errors.ConfigurationError(
          f'Unsupported value of: level: {level:d} expected 1 or 2 for '
          f'method: {method:s}')

    if method != definitions.METHOD_SHOOTING and (
        configuration.GetValue('n_points') is None):
      raise errors.ConfigurationError(
          f'Missing value of: n_points for method: {method:s}')

    # Sector bounds are in units of sigma0.
    parameters = resources.OscillatorParameters.FromDiffusion(0.5, 1.0)
    nodes = states.CreateOscillatorEigenstate(level, parameters).nodes
    for bound in (lower, upper):
      if math.isfinite(bound) and not any(
          abs(bound - node) <= 1e-9 for node in nodes):
        raise errors.ConfigurationError(
            f'Invalid value of: sector bound: {bound!s} is not a node of '
            f'level: {level:d}')

    for node in nodes:
      if lower < node < upper:
        raise errors.ConfigurationError(
            f'Invalid value of: sector contains the node: {node:.6g}')

  def _RunCoherent(self, configuration, parameters, writer):
    """Runs the coherent transition scenario.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.
      parameters (OscillatorParameters): oscillator parameters.
      writer (OutputWriter): output writer.
    """
    amplitude = configuration.GetValue('a')
    switch = controlling_potentials.SwitchFunction(
        configuration.GetValue('N'), configuration.GetValue('tau'))
    frequency = parameters.frequency
    times = self._GetTimes(configuration)

    coefficients, rates = switch.GetCoefficients()
    _, weights = controlling_potentials.GetTransitionCoefficients(
        switch, frequency, 0.0)
    indexes = numpy.arange(1, switch.order + 1)

    metadata = {'N': switch.order, 'switch_rate': switch.switch_rate}
    writer.WriteTable(
        'coefficients.csv', configuration.name, 'coherent_coefficients',
        ['k', 'c_k', 'omega_k', 'W_k'], [indexes, coefficients, rates, weights],
        metadata=metadata)

    means = numpy.zeros((times.size, 3))
    for index, time in enumerate(times):
      means[index] = controlling_potentials.GetCoherentTransitionMean(
          time, amplitude, switch, frequency)

    linear_coefficients = parameters.mass * (
        means[:, 2] + frequency * frequency * means[:, 0])

    writer.WriteTable(
        'transition.csv', configuration.name, 'coherent_transition',
        ['t', 'F', 'mu', 'mu_dot', 'linear_coefficient'],
        [times, switch.GetValue(times), means[:, 0], means[:, 1],
         linear_coefficients], metadata=metadata)

    grid = self._GetGrid(
        configuration, parameters, initial_position=amplitude)
    time_column, x_column = numpy.meshgrid(times, grid.points, indexing='ij')
    potentials = numpy.array([
        controlling_potentials.GetCoherentTransitionPotential(
            grid.points, time, amplitude, switch, parameters)
        for time in times])

    writer.WriteTable(
        'potential.csv', configuration.name, 'coherent_transition',
        ['t', 'x', 'V'], [time_column, x_column, potentials],
        metadata=metadata)

  def _RunControl(self, configuration, parameters, writer):
    """Runs the controlling potential synthesis scenario.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.
      parameters (OscillatorParameters): oscillator parameters.
      writer (OutputWriter): output writer.
    """
    pair = self._CreateFlow(configuration, parameters)
    times = self._GetTimes(configuration)
    grid = self._GetGrid(
        configuration, pair.parameters,
        initial_position=configuration.GetValue('x0') or 0.0)

    densities = numpy.array([
        pair.GetDensity(grid.points, time) for time in times])
    is_positive = numpy.all(densities > 1e-300, axis=0)
    positions = grid.points[is_positive]
    if not positions.size:
      raise errors.DomainError('Density of the flow vanishes on the grid.')

    time_column, x_column = numpy.meshgrid(times, positions, indexing='ij')
    phases = numpy.array([
        controlling_potentials.SynthesizePhase(pair, positions, time)
        for time in times])
    potentials = numpy.array([
        controlling_potentials.SynthesizePotential(pair, positions, time)
        for time in times])

    # Numerical derivatives are unreliable where the density is negligible.
    is_resolved = numpy.all(
        densities[:, is_positive] > 1e-6 * numpy.max(densities), axis=0)
    resolved_positions = positions[is_resolved]

    residual = None
    if resolved_positions.size:
      residual = controlling_potentials.GetFlowMadelungResidual(
          pair, resolved_positions, list(times))
      logging.info(f'Madelung residual: {residual:.3g}')

    metadata = {
        'flow': configuration.GetValue('flow'),
        'madelung_residual': residual}
    writer.WriteTable(
        'control.csv', configuration.name, 'control', ['t', 'x', 'S', 'V'],
        [time_column, x_column, phases, potentials], metadata=metadata)

  def _RunDecay(self, configuration, parameters, writer):
    """Runs the decay scenario.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.
      parameters (OscillatorParameters): oscillator parameters.
      writer (OutputWriter): output writer.
    """
    grid = self._GetGrid(configuration, parameters)
    times = self._GetTimes(configuration)

    weights = transition_kernels.GetMixtureWeights(times, parameters.frequency)
    writer.WriteTable(
        'weights.csv', configuration.name, 'decay_mixture',
        ['t', 'beta2', 'gamma2', 'b2'],
        [times, weights.beta_squared, weights.gamma_squared,
         weights.b_squared])

    time_column, x_column = numpy.meshgrid(times, grid.points, indexing='ij')
    densities = numpy.array([
        transition_kernels.GetDecayMixture(grid.points, time, parameters)
        for time in times])
    writer.WriteTable(
        'mixture.csv', configuration.name, 'decay_mixture',
        ['t', 'x', 'density'], [time_column, x_column, densities])

    # The potential is singular at the node at t = 0.
    potential_times = times[times > 0.0]
    if potential_times.size:
      time_column, x_column = numpy.meshgrid(
          potential_times, grid.points, indexing='ij')
      potentials = numpy.array([
          controlling_potentials.GetDecayPotential(
              grid.points, time, parameters)
          for time in potential_times])
      writer.WriteTable(
          'potential.csv', configuration.name, 'decay_potential',
          ['t', 'x', 'V'], [time_column, x_column, potentials],
          metadata={'discontinuous_at_start': True})

  def _RunEigenvalues(self, configuration, parameters, writer):
    """Runs the Sturm-Liouville eigenvalues scenario.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.
      parameters (OscillatorParameters): oscillator parameters.
      writer (OutputWriter): output writer.
    """
    level = configuration.GetValue('level')
    method = configuration.GetValue('method')
    number_of_eigenvalues = configuration.GetValue('n_eigenvalues')
    lower, upper = configuration.GetValue('sector')
    frequency = parameters.frequency
    is_symmetric = lower == -upper

    metadata = {'level': level, 'sector': [lower, upper]}

    if method in (definitions.METHOD_BOTH, definitions.METHOD_SHOOTING):
      symmetries = ['odd', 'even'] if is_symmetric else ['all']
      for symmetry in symmetries:
        scaled_eigenvalues = numpy.array(spectral.SolveEigenvaluesByShooting(
            level, (lower, upper), number_of_eigenvalues, symmetry=symmetry))

        filename = 'eigenvalues.csv'
        if symmetry == 'even':
          filename = 'eigenvalues_even.csv'

        table_metadata = dict(metadata)
        table_metadata['method'] = definitions.METHOD_SHOOTING
        table_metadata['symmetry'] = symmetry
        writer.WriteTable(
            filename, configuration.name, 'eigenvalues',
            ['index', 'mu', 'lambda'],
            [numpy.arange(scaled_eigenvalues.size), scaled_eigenvalues,
             scaled_eigenvalues * frequency], metadata=table_metadata)

    if method in (
        definitions.METHOD_BOTH, definitions.METHOD_FINITE_DIFFERENCES):
      self._RunFiniteDifferenceEigenvalues(
          configuration, parameters, writer, metadata)

  def _RunEvolve(self, configuration, parameters, writer):
    """Runs the density evolution scenario.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.
      parameters (OscillatorParameters): oscillator parameters.
      writer (OutputWriter): output writer.
    """
    flow = configuration.GetValue('flow')
    level = configuration.GetValue('level')
    method = configuration.GetValue('method')
    initial_position = configuration.GetValue('x0') or 0.0
    times = self._GetTimes(configuration)
    start_time = float(times[0])

    grid = self._GetGrid(
        configuration, parameters, initial_position=initial_position)
    drift = drifts.StationaryStateDrift(
        states.CreateOscillatorEigenstate(level, parameters))

    if flow == definitions.FLOW_ORNSTEIN_UHLENBECK:
      initial_density = fokker_planck.CreateDeltaDensity(
          grid, initial_position, time=start_time)
    else:
      initial_level = 1 if flow == definitions.FLOW_EXCITED else level
      state = states.CreateOscillatorEigenstate(initial_level, parameters)
      initial_density = fokker_planck.CreateGridDensity(
          grid, state.GetDensity, time=start_time)

    if method == definitions.METHOD_SPECTRAL:
      problem = spectral.BuildSturmLiouvilleProblem(
          drift, parameters.diffusion, grid.lower, grid.upper)
      number_of_modes = min(
          configuration.GetValue('n_eigenvalues', self._DEFAULT_NUMBER_OF_MODES),
          grid.number_of_points // 4)
      system = spectral.SolveEigenvaluesFiniteDifferences(
          problem, grid, number_of_modes, check_resolution=False)
      coefficients = spectral.Expand(initial_density, system)
      densities = [
          spectral.GetSpectralDensity(system, coefficients, time - start_time)
          for time in times]
    else:
      densities = fokker_planck.EvolveDensity(
          drift, parameters.diffusion, initial_density, list(times))

    reference_function = self._GetEvolveReference(
        flow, level, initial_position, parameters)

    column_names = ['t', 'x', 'density']
    time_column, x_column = numpy.meshgrid(times, grid.points, indexing='ij')
    columns = [
        time_column, x_column,
        numpy.array([density.values for density in densities])]

    metadata = {
        'flow': flow,
        'level': level,
        'method': method,
        'sector_masses': densities[-1].sector_masses}

    if reference_function:
      references = []
      for time, density in zip(times, densities):
        if time > start_time or flow != definitions.FLOW_ORNSTEIN_UHLENBECK:
          reference = reference_function(grid.points, time - start_time)
        else:
          reference = initial_density.values
        references.append(reference)

      references = numpy.array(references)
      column_names.append('reference')
      columns.append(references)

      weights = grid.GetTrapezoidWeights()
      metadata['l1'] = [
          float(numpy.sum(weights * numpy.abs(density.values - reference)))
          for density, reference in zip(densities, references)]

    writer.WriteTable(
        'density.csv', configuration.name, 'evolve', column_names, columns,
        metadata=metadata)

  def _GetEvolveReference(self, flow, level, initial_position, parameters):
    """Retrieves the closed-form density of an evolution if known.

    Args:
      flow (str): initial law of the evolution.
      level (int): level of the drift.
      initial_position (float): initial position.
      parameters (OscillatorParameters): oscillator parameters.

    Returns:
      callable: density function of position and elapsed time or None.
    """
    if flow == definitions.FLOW_STATIONARY or (
        flow == definitions.FLOW_EXCITED and level == 1):
      state = states.CreateOscillatorEigenstate(level, parameters)
      return lambda x, time: state.GetDensity(x)

    if flow == definitions.FLOW_EXCITED and level == 0:
      return lambda x, time: transition_kernels.GetDecayMixture(
          x, time, parameters)

    if flow == definitions.FLOW_ORNSTEIN_UHLENBECK and level in (0, 1):
      if level == 0:
        kernel = transition_kernels.OrnsteinUhlenbeckKernel(parameters)
      elif initial_position != 0.0:
        kernel = transition_kernels.ExcitedStateKernel(parameters)
      else:
        return None

      return lambda x, time: kernel.GetDensity(x, time, initial_position)

    return None

  def _RunFiniteDifferenceEigenvalues(
      self, configuration, parameters, writer, metadata):
    """Runs the finite-difference part of the eigenvalues scenario.

    Infinite sector bounds are truncated at L sigma0 with a Dirichlet
    condition.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.
      parameters (OscillatorParameters): oscillator parameters.
      writer (OutputWriter): output writer.
      metadata (dict[str, object]): metadata of the tables.
    """
    level = configuration.GetValue('level')
    number_of_eigenvalues = configuration.GetValue('n_eigenvalues')
    lower, upper = configuration.GetValue('sector')
    half_width = configuration.GetValue('L', spectral.SHOOTING_BOUND)
    sigma0 = parameters.sigma0

    boundaries = []
    bounds = []
    for bound, infinity in ((lower, -half_width), (upper, half_width)):
      if math.isfinite(bound):
        bounds.append(bound * sigma0)
        boundaries.append('node')
      else:
        bounds.append(infinity * sigma0)
        boundaries.append('dirichlet')

    grid = resources.Grid(
        bounds[0], bounds[1], configuration.GetValue('n_points'),
        truncated=not (math.isfinite(lower) and math.isfinite(upper)))

    drift = drifts.StationaryStateDrift(
        states.CreateOscillatorEigenstate(level, parameters))
    problem = spectral.BuildSturmLiouvilleProblem(
        drift, parameters.diffusion, bounds[0], bounds[1],
        boundaries=tuple(boundaries))

    # Symmetric sectors are solved for both parity classes.
    is_symmetric = lower == -upper
    number_of_modes = number_of_eigenvalues
    if is_symmetric:
      number_of_modes = 2 * number_of_eigenvalues

    system = spectral.SolveEigenvaluesFiniteDifferences(
        problem, grid, number_of_modes)
    scaled_eigenvalues = system.GetScaledEigenvalues()

    column_names = ['index', 'mu', 'lambda']
    columns = [
        numpy.arange(scaled_eigenvalues.size), scaled_eigenvalues,
        system.eigenvalues]
    if system.parities:
      column_names.append('odd')
      columns.append(numpy.array([
          1 if parity == 'odd' else 0 for parity in system.parities]))

    table_metadata = dict(metadata)
    table_metadata['method'] = definitions.METHOD_FINITE_DIFFERENCES
    table_metadata['n_points'] = grid.number_of_points
    table_metadata['relative_change'] = system.relative_change
    table_metadata['resolution_warning'] = system.resolution_warning

    writer.WriteTable(
        'eigenvalues_fd.csv', configuration.name, 'eigenvalues',
        column_names, columns, metadata=table_metadata)

  def _RunKernel(self, configuration, parameters, writer):
    """Runs the transition kernel scenario.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.
      parameters (OscillatorParameters): oscillator parameters.
      writer (OutputWriter): output writer.
    """
    kernel_name = configuration.GetValue('kernel')
    initial_position = configuration.GetValue('x0')
    times = self._GetTimes(configuration)
    grid = self._GetGrid(
        configuration, parameters, initial_position=initial_position)

    if kernel_name == definitions.FLOW_EXCITED:
      kernel = transition_kernels.ExcitedStateKernel(parameters)
      formula = 'excited_kernel'
    else:
      kernel = transition_kernels.OrnsteinUhlenbeckKernel(parameters)
      formula = 'ou_kernel'

    time_column, x_column = numpy.meshgrid(times, grid.points, indexing='ij')
    densities = numpy.array([
        kernel.GetDensity(grid.points, time, initial_position)
        for time in times])

    metadata = {'kernel': kernel_name, 'x0': initial_position}
    writer.WriteTable(
        'kernel.csv', configuration.name, formula, ['t', 'x', 'p'],
        [time_column, x_column, densities], metadata=metadata)

    epsilon = configuration.GetValue('epsilon')
    if epsilon is not None and kernel_name == definitions.FLOW_EXCITED:
      asymptote = transition_kernels.GetExcitedAsymptote(
          epsilon, grid.points, parameters)
      writer.WriteTable(
          'asymptote.csv', configuration.name, 'excited_asymptote',
          ['x', 'density'], [grid.points, asymptote],
          metadata={'epsilon': epsilon})

  def _RunSimulate(self, configuration, parameters, writer):
    """Runs the Monte Carlo ensemble scenario.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.
      parameters (OscillatorParameters): oscillator parameters.
      writer (OutputWriter): output writer.
    """
    flow = configuration.GetValue('flow')
    initial_position = configuration.GetValue('x0')
    times = self._GetTimes(configuration)
    grid = self._GetGrid(
        configuration, parameters, initial_position=initial_position)

    if flow == definitions.FLOW_EXCITED:
      level = 1
      kernel = transition_kernels.ExcitedStateKernel(parameters)
      formula = 'excited_kernel'
    else:
      level = 0
      kernel = transition_kernels.OrnsteinUhlenbeckKernel(parameters)
      formula = 'ou_kernel'

    drift = drifts.StationaryStateDrift(
        states.CreateOscillatorEigenstate(level, parameters))

    specification = resources.EnsembleSpecification(
        configuration.GetValue('n_paths'), list(times),
        configuration.GetValue('dt'), parameters.diffusion, grid,
        seed=configuration.GetValue('seed'),
        initial_position=initial_position,
        number_of_workers=configuration.GetValue('workers', 1),
        frequency=parameters.frequency)

    simulator = ensemble_simulator.EnsembleSimulator()
    empirical_densities = simulator.SimulateEnsemble(drift, specification)

    distances = []
    analytic_densities = []
    for empirical_density in empirical_densities:
      time = empirical_density.time

      def _GetAnalyticDensity(x, time=time):
        return kernel.GetDensity(x, time, initial_position)

      distances.append(ensemble_simulator.Compare(
          empirical_density, _GetAnalyticDensity))
      analytic_densities.append(_GetAnalyticDensity(grid.points))

    last_density = empirical_densities[-1]
    metadata = {
        'dt': specification.time_step,
        'fidelity_warning': last_density.fidelity_warning,
        'halved_steps': last_density.halved_steps,
        'ks': [distance['ks'] for distance in distances],
        'l1': [distance['l1'] for distance in distances],
        'means': [density.mean for density in empirical_densities],
        'n_paths': specification.number_of_paths,
        'rejected_steps': last_density.rejected_steps,
        'sector_masses': [
            density.sector_masses for density in empirical_densities],
        'seed': specification.seed,
        'times': [density.time for density in empirical_densities],
        'variances': [density.variance for density in empirical_densities]}

    writer.WriteJSON('metadata.json', metadata)

    time_column, x_column = numpy.meshgrid(times, grid.points, indexing='ij')
    writer.WriteTable(
        'histogram.csv', configuration.name, 'simulate',
        ['t', 'x', 'density', 'analytic'],
        [time_column, x_column,
         numpy.array([density.values for density in empirical_densities]),
         numpy.array(analytic_densities)],
        metadata={'analytic': definitions.FORMULA_DESCRIPTIONS[formula],
                  'seed': specification.seed})

  def _RunSqueeze(self, configuration, parameters, writer):
    """Runs the squeezing schedule scenario.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.
      parameters (OscillatorParameters): oscillator parameters.
      writer (OutputWriter): output writer.
    """
    specification = self._GetSqueezeSpecification(configuration, parameters)
    times = self._GetTimes(configuration)
    schedule = controlling_potentials.GetSqueezeSchedule(specification, times)

    metadata = {
        'D': specification.diffusion,
        'b': specification.ratio,
        'sigma0': specification.sigma0,
        'tau': specification.time_scale}
    writer.WriteTable(
        'schedule.csv', configuration.name, 'squeeze_schedule',
        ['t', 'Omega', 'Delta', 'omega2', 'c'],
        [schedule.times, schedule.phase_curvature, schedule.phase_offset,
         schedule.frequency_squared, schedule.offset], metadata=metadata)

  def GetConfiguration(self, configuration):
    """Completes and validates a scenario configuration.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.

    Returns:
      tuple[ScenarioConfiguration, OscillatorParameters]: completed scenario
          configuration and its oscillator parameters.

    Raises:
      ConfigurationError: if the scenario configuration is not valid.
    """
    configuration = self._MergeDefaults(configuration)
    parameters = self._ValidateConfiguration(configuration)
    return configuration, parameters

  def RunScenario(self, configuration, output_path=None):
    """Runs a scenario.

    Args:
      configuration (ScenarioConfiguration): scenario configuration.
      output_path (Optional[str]): path of the output directory, where None
          represents the output value of the configuration.

    Returns:
      str: path of the manifest.

    Raises:
      ConfigurationError: if the scenario configuration is not valid.
      Error: if a computation of the scenario fails.
    """
    configuration, parameters = self.GetConfiguration(configuration)

    output_path = output_path or configuration.GetValue('output')
    if not output_path:
      raise errors.ConfigurationError('Missing value of: output')

    logging.info(f'Running scenario: {configuration.name:s}')

    writer = output_writer.OutputWriter(output_path)
    run_method = {
        definitions.SCENARIO_COHERENT: self._RunCoherent,
        definitions.SCENARIO_CONTROL: self._RunControl,
        definitions.SCENARIO_DECAY: self._RunDecay,
        definitions.SCENARIO_EIGENVALUES: self._RunEigenvalues,
        definitions.SCENARIO_EVOLVE: self._RunEvolve,
        definitions.SCENARIO_KERNEL: self._RunKernel,
        definitions.SCENARIO_SIMULATE: self._RunSimulate,
        definitions.SCENARIO_SQUEEZE: self._RunSqueeze}[configuration.name]

    run_method(configuration, parameters, writer)

    echo = configuration.CopyToDict()
    if 'sector' in echo:
      echo['sector'] = [
          bound if math.isfinite(bound) else None for bound in echo['sector']]

    echo['output'] = output_path
    echo['parameters'] = parameters.CopyToDict()
    return writer.WriteManifest(echo)
