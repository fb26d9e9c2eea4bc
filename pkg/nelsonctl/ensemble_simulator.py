# -*- coding: utf-8 -*-
"""Monte Carlo simulation of Nelson diffusions.

Paths follow the Euler-Maruyama scheme dx = v(x, t) dt + sqrt(2 D dt) z.
The normal deviates are drawn from a counter-based generator keyed by the
seed and addressed by (path block, step, attempt, stream), so the results
do not depend on how the paths are partitioned over workers.
"""

from concurrent import futures

import logging
import math

import numpy

from nelsonctl import errors
from nelsonctl import fokker_planck
from nelsonctl import resources


FIDELITY_TOLERANCE = 1e-3

MAXIMUM_NUMBER_OF_REDRAWS = 100

_INITIAL_STREAM = 1

_STEP_STREAM = 0


class _ChunkResult(object):
  """Positions of a chunk of paths at the recorded times.

  Attributes:
    halved_steps (int): number of steps retried as two half steps.
    positions (list[numpy.ndarray]): positions per recorded time.
    rejected_steps (int): number of rejected proposals.
  """

  def __init__(self):
    """Initializes a chunk result."""
    super(_ChunkResult, self).__init__()
    self.halved_steps = 0
    self.positions = []
    self.rejected_steps = 0


class EnsembleSimulator(object):
  """Monte Carlo ensemble simulator."""

  def _GetNormalDeviates(
      self, seed, first_path, number_of_paths, step, attempt, stream):
    """Draws standard normal deviates for a chunk of paths.

    Args:
      seed (int): generator key.
      first_path (int): index of the first path, a multiple of 4.
      number_of_paths (int): number of paths.
      step (int): step index.
      attempt (int): attempt index.
      stream (int): stream index.

    Returns:
      numpy.ndarray: one deviate per path.
    """
    bit_generator = numpy.random.Philox(
        key=seed, counter=[first_path // 4, step, attempt, stream])
    uniforms = self._GetUniforms(bit_generator, number_of_paths)

    # Box-Muller transform on pairs of consecutive paths.
    radii = numpy.sqrt(-2.0 * numpy.log1p(-uniforms[0::2]))
    angles = 2.0 * math.pi * uniforms[1::2]

    deviates = numpy.empty(2 * radii.size)
    deviates[0::2] = radii * numpy.cos(angles)
    deviates[1::2] = radii * numpy.sin(angles)
    return deviates[:number_of_paths]

  def _GetUniforms(self, bit_generator, number_of_values):
    """Draws uniform deviates in [0, 1) with 53-bit resolution.

    Args:
      bit_generator (numpy.random.BitGenerator): bit generator.
      number_of_values (int): number of values, rounded up to an even number.

    Returns:
      numpy.ndarray: uniform deviates.
    """
    number_of_values += number_of_values % 2
    raw_values = bit_generator.random_raw(number_of_values)
    return (raw_values >> numpy.uint64(11)).astype(numpy.float64) * (
        2.0 ** -53)

  def _GetInitialPositions(self, specification, first_path, number_of_paths):
    """Determines the initial positions of a chunk of paths.

    Args:
      specification (EnsembleSpecification): ensemble specification.
      first_path (int): index of the first path.
      number_of_paths (int): number of paths.

    Returns:
      numpy.ndarray: initial positions.
    """
    if specification.initial_density is None:
      return numpy.full(number_of_paths, float(specification.initial_position))

    density = specification.initial_density
    values = numpy.maximum(density.values, 0.0)
    cumulative = numpy.concatenate([[0.0], numpy.cumsum(
        0.5 * (values[1:] + values[:-1]) * density.grid.spacing)])
    cumulative /= cumulative[-1]

    bit_generator = numpy.random.Philox(
        key=specification.seed,
        counter=[first_path // 4, 0, 0, _INITIAL_STREAM])
    uniforms = self._GetUniforms(bit_generator, number_of_paths)
    return numpy.interp(
        uniforms[:number_of_paths], cumulative, density.grid.points)

  def _Propose(
      self, drift, positions, time, time_step, deviates, diffusion, nodes,
      guard_radius):
    """Proposes Euler-Maruyama steps and checks them against the nodes.

    Args:
      drift (DriftField): drift.
      positions (numpy.ndarray): current positions.
      time (float): current time.
      time_step (float): time step.
      deviates (numpy.ndarray): standard normal deviates.
      diffusion (float): diffusion coefficient D.
      nodes (numpy.ndarray): sorted singularities of the drift.
      guard_radius (float): distance to a node below which a step is
          rejected.

    Returns:
      tuple[numpy.ndarray, numpy.ndarray]: proposed positions and a mask of
          the accepted proposals.
    """
    proposals = (positions + drift.GetVelocity(positions, time) * time_step +
                 math.sqrt(2.0 * diffusion * time_step) * deviates)

    accepted = numpy.isfinite(proposals)
    if nodes.size:
      accepted &= numpy.searchsorted(nodes, proposals) == numpy.searchsorted(
          nodes, positions)
      distances = numpy.min(numpy.abs(
          proposals[:, numpy.newaxis] - nodes[numpy.newaxis, :]), axis=1)
      accepted &= distances >= guard_radius

    return proposals, accepted

  def _SimulateChunk(self, drift, specification, nodes, first_path,
                     number_of_paths):
    """Simulates a chunk of paths.

    Args:
      drift (DriftField): drift.
      specification (EnsembleSpecification): ensemble specification.
      nodes (numpy.ndarray): sorted singularities of the drift.
      first_path (int): index of the first path, a multiple of 4.
      number_of_paths (int): number of paths.

    Returns:
      _ChunkResult: positions at the recorded times.
    """
    diffusion = specification.diffusion
    guard_radius = specification.guard_radius
    seed = specification.seed

    chunk_result = _ChunkResult()
    positions = self._GetInitialPositions(
        specification, first_path, number_of_paths)

    time = specification.start_time
    step = 0
    for target_time in specification.times:
      number_of_steps = int(math.ceil(
          (target_time - time) / specification.time_step - 1e-9))
      if number_of_steps > 0:
        time_step = (target_time - time) / number_of_steps
        start_time = time

        for step_index in range(number_of_steps):
          time = start_time + step_index * time_step
          deviates = self._GetNormalDeviates(
              seed, first_path, number_of_paths, step, 0, _STEP_STREAM)
          proposals, accepted = self._Propose(
              drift, positions, time, time_step, deviates, diffusion, nodes,
              guard_radius)

          attempt = 0
          while not numpy.all(accepted) and (
              attempt < MAXIMUM_NUMBER_OF_REDRAWS):
            rejected = numpy.flatnonzero(~accepted)
            chunk_result.rejected_steps += rejected.size
            attempt += 1

            deviates = self._GetNormalDeviates(
                seed, first_path, number_of_paths, step, attempt,
                _STEP_STREAM)
            redrawn, redrawn_accepted = self._Propose(
                drift, positions[rejected], time, time_step,
                deviates[rejected], diffusion, nodes, guard_radius)
            proposals[rejected] = redrawn
            accepted[rejected] = redrawn_accepted

          if not numpy.all(accepted):
            rejected = numpy.flatnonzero(~accepted)
            chunk_result.rejected_steps += rejected.size
            chunk_result.halved_steps += rejected.size
            proposals[rejected] = self._HalveStep(
                drift, positions[rejected], rejected, time, time_step,
                specification, nodes, first_path, number_of_paths, step)

          positions = proposals
          step += 1

      time = target_time
      chunk_result.positions.append(positions.copy())

    return chunk_result

  def _HalveStep(
      self, drift, positions, path_indexes, time, time_step, specification,
      nodes, first_path, number_of_paths, step):
    """Retries rejected steps as two half steps.

    Paths whose half steps are rejected stay in place.

    Args:
      drift (DriftField): drift.
      positions (numpy.ndarray): positions of the rejected paths.
      path_indexes (numpy.ndarray): indexes of the rejected paths in the
          chunk.
      time (float): current time.
      time_step (float): time step.
      specification (EnsembleSpecification): ensemble specification.
      nodes (numpy.ndarray): sorted singularities of the drift.
      first_path (int): index of the first path of the chunk.
      number_of_paths (int): number of paths of the chunk.
      step (int): step index.

    Returns:
      numpy.ndarray: new positions of the rejected paths.
    """
    half_step = 0.5 * time_step
    new_positions = positions.copy()
    in_place = numpy.zeros(positions.size, dtype=bool)

    for half_index in range(2):
      deviates = self._GetNormalDeviates(
          specification.seed, first_path, number_of_paths, step,
          MAXIMUM_NUMBER_OF_REDRAWS + 1 + half_index, _STEP_STREAM)
      proposals, accepted = self._Propose(
          drift, new_positions, time + half_index * half_step, half_step,
          deviates[path_indexes], specification.diffusion, nodes,
          specification.guard_radius)
      new_positions = numpy.where(accepted, proposals, new_positions)
      in_place |= ~accepted

    return numpy.where(in_place, positions, new_positions)

  def SimulateEnsemble(self, drift, specification):
    """Simulates an ensemble of paths and histograms it.

    Args:
      drift (DriftField): drift.
      specification (EnsembleSpecification): ensemble specification.

    Returns:
      list[EmpiricalDensity]: histogram per recorded time.

    Raises:
      DomainError: if the initial position is at a singularity of the drift.
    """
    grid = specification.grid
    if drift.singularities is not None:
      nodes = numpy.array(sorted(drift.singularities), dtype=numpy.float64)
    else:
      nodes = numpy.array(
          fokker_planck.SplitDomain(drift, grid).breakpoints,
          dtype=numpy.float64)

    if specification.initial_position is not None and nodes.size and (
        numpy.min(numpy.abs(nodes - specification.initial_position)) <
        specification.guard_radius):
      raise errors.DomainError((
          f'Unsupported initial position at a node: '
          f'{specification.initial_position:.12g}'))

    chunk_size = specification.chunk_size
    chunks = [
        (first_path, min(chunk_size, specification.number_of_paths - first_path))
        for first_path in range(0, specification.number_of_paths, chunk_size)]

    with futures.ThreadPoolExecutor(
        max_workers=specification.number_of_workers) as executor:
      chunk_results = list(executor.map(
          lambda chunk: self._SimulateChunk(
              drift, specification, nodes, chunk[0], chunk[1]), chunks))

    rejected_steps = sum(result.rejected_steps for result in chunk_results)
    halved_steps = sum(result.halved_steps for result in chunk_results)

    number_of_steps = max(1, int(math.ceil(
        (specification.times[-1] - specification.start_time) /
        specification.time_step - 1e-9)))
    rejection_rate = rejected_steps / (
        specification.number_of_paths * number_of_steps)
    fidelity_warning = rejection_rate > FIDELITY_TOLERANCE
    if fidelity_warning:
      logging.warning((
          f'Rejected {rejected_steps:d} steps, rate: {rejection_rate:.3g}, '
          f'reduce the time step.'))

    edges = numpy.concatenate([
        grid.points - 0.5 * grid.spacing,
        [grid.points[-1] + 0.5 * grid.spacing]])

    empirical_densities = []
    for time_index, time in enumerate(specification.times):
      positions = numpy.concatenate([
          result.positions[time_index] for result in chunk_results])
      counts, _ = numpy.histogram(positions, bins=edges)

      empirical_density = resources.EmpiricalDensity(
          grid, counts, specification.number_of_paths, time=time)
      empirical_density.fidelity_warning = fidelity_warning
      empirical_density.halved_steps = halved_steps
      empirical_density.rejected_steps = rejected_steps

      mean = math.fsum(positions) / positions.size
      empirical_density.mean = mean
      empirical_density.variance = math.fsum(
          (positions - mean) ** 2) / positions.size

      sector_indexes = numpy.searchsorted(nodes, positions)
      empirical_density.sector_masses = [
          float(count) / positions.size
          for count in numpy.bincount(sector_indexes, minlength=nodes.size + 1)]

      empirical_densities.append(empirical_density)

    return empirical_densities


def Compare(empirical_density, density_function):
  """Compares an empirical density with an analytic density.

  Args:
    empirical_density (EmpiricalDensity): empirical density.
    density_function (callable): analytic density function of positions.

  Returns:
    dict[str, float]: L1 distance "l1" on the grid and Kolmogorov-Smirnov
        distance "ks" of the cumulative distributions at the cell edges.
  """
  grid = empirical_density.grid
  analytic_values = density_function(grid.points)
  l1_distance = float(numpy.sum(numpy.abs(
      empirical_density.values - analytic_values)) * grid.spacing)

  edges = empirical_density.GetCellEdges()
  sub_cell_offsets = (numpy.arange(8) + 0.5) / 8.0 * grid.spacing
  sub_cell_points = edges[:-1, numpy.newaxis] + sub_cell_offsets
  cell_masses = numpy.sum(
      density_function(sub_cell_points.ravel()).reshape(
          sub_cell_points.shape), axis=1) * grid.spacing / 8.0

  analytic_cumulative = numpy.concatenate([[0.0], numpy.cumsum(cell_masses)])
  empirical_cumulative = numpy.concatenate([[0.0], numpy.cumsum(
      empirical_density.counts)]) / empirical_density.number_of_paths
  ks_distance = float(numpy.max(numpy.abs(
      empirical_cumulative - analytic_cumulative)))

  return {'ks': ks_distance, 'l1': l1_distance}
