# -*- coding: utf-8 -*-
"""Forward drift fields of Nelson diffusions."""

import math

import numpy

from nelsonctl import errors


class DriftField(object):
  """Forward drift field v(x, t).

  Attributes:
    frequency (float): characteristic frequency of the drift or None.
    has_potential (bool): True if the drift supports GetPotential.
    is_time_dependent (bool): True if the drift depends on time.
    length_scale (float): natural length scale of the drift.
    singularities (list[float]): sorted singular points or None if not
        known analytically.
  """

  def __init__(
      self, singularities=None, is_time_dependent=False, frequency=None,
      length_scale=1.0):
    """Initializes a drift field.

    Args:
      singularities (Optional[list[float]]): sorted singular points or None
          if not known analytically.
      is_time_dependent (Optional[bool]): True if the drift depends on time.
      frequency (Optional[float]): characteristic frequency of the drift.
      length_scale (Optional[float]): natural length scale of the drift.
    """
    super(DriftField, self).__init__()
    self.frequency = frequency
    self.has_potential = False
    self.is_time_dependent = is_time_dependent
    self.length_scale = length_scale
    self.singularities = singularities

  def GetPotential(self, x, time=0.0):
    """Evaluates the drift potential W with v = dW/dx.

    Args:
      x (numpy.ndarray|float): positions.
      time (Optional[float]): time.

    Returns:
      numpy.ndarray: drift potential.

    Raises:
      NotImplementedError: if the drift has no potential.
    """
    raise NotImplementedError()

  def GetVelocity(self, x, time=0.0):
    """Evaluates the drift.

    Args:
      x (numpy.ndarray|float): positions.
      time (Optional[float]): time.

    Returns:
      numpy.ndarray: drift.
    """
    raise NotImplementedError()

  def GetVelocityDerivative(self, x, time=0.0):
    """Evaluates the spatial derivative of the drift.

    The default uses 4th-order central differences.

    Args:
      x (numpy.ndarray|float): positions.
      time (Optional[float]): time.

    Returns:
      numpy.ndarray: drift derivative.
    """
    x = numpy.asarray(x, dtype=numpy.float64)
    step = 1e-4 * self.length_scale
    return (-self.GetVelocity(x + 2.0 * step, time) +
            8.0 * self.GetVelocity(x + step, time) -
            8.0 * self.GetVelocity(x - step, time) +
            self.GetVelocity(x - 2.0 * step, time)) / (12.0 * step)


class StationaryStateDrift(DriftField):
  """Forward drift of an oscillator eigenstate."""

  def __init__(self, state):
    """Initializes a stationary state drift.

    Args:
      state (StationaryState): oscillator eigenstate.
    """
    super(StationaryStateDrift, self).__init__(
        singularities=list(state.nodes), frequency=state.parameters.frequency,
        length_scale=state.parameters.sigma0)
    self._state = state
    self.has_potential = True

  def GetPotential(self, x, time=0.0):
    """Evaluates the drift potential W = D ln(sigma0 rho_n).

    Args:
      x (numpy.ndarray|float): positions.
      time (Optional[float]): time.

    Returns:
      numpy.ndarray: drift potential.
    """
    return self._state.GetDriftPotential(x)

  def GetVelocity(self, x, time=0.0):
    """Evaluates the drift.

    Args:
      x (numpy.ndarray|float): positions.
      time (Optional[float]): time.

    Returns:
      numpy.ndarray: drift.

    Raises:
      SingularityError: if a position lies at a node.
    """
    return self._state.GetDrift(x)

  def GetVelocityDerivative(self, x, time=0.0):
    """Evaluates the spatial derivative of the drift.

    Args:
      x (numpy.ndarray|float): positions.
      time (Optional[float]): time.

    Returns:
      numpy.ndarray: drift derivative.

    Raises:
      SingularityError: if a position lies at a node.
    """
    return self._state.GetDriftDerivative(x)


class LinearDrift(DriftField):
  """Linear drift v = A(t) + B(t) x."""

  def __init__(self, intercept, slope, frequency=None, length_scale=1.0):
    """Initializes a linear drift.

    Args:
      intercept (float|callable): intercept A or a function of time.
      slope (float|callable): slope B or a function of time.
      frequency (Optional[float]): characteristic frequency of the drift.
      length_scale (Optional[float]): natural length scale of the drift.
    """
    is_time_dependent = callable(intercept) or callable(slope)
    if frequency is None and not callable(slope) and slope != 0.0:
      frequency = abs(slope)

    super(LinearDrift, self).__init__(
        singularities=[], is_time_dependent=is_time_dependent,
        frequency=frequency, length_scale=length_scale)
    self._intercept = intercept
    self._slope = slope
    self.has_potential = True

  def GetCoefficients(self, time=0.0):
    """Retrieves the drift coefficients.

    Args:
      time (Optional[float]): time.

    Returns:
      tuple[float, float]: intercept A and slope B.
    """
    intercept = self._intercept
    if callable(intercept):
      intercept = intercept(time)

    slope = self._slope
    if callable(slope):
      slope = slope(time)

    return intercept, slope

  def GetPotential(self, x, time=0.0):
    """Evaluates the drift potential W = A x + B x^2 / 2.

    Args:
      x (numpy.ndarray|float): positions.
      time (Optional[float]): time.

    Returns:
      numpy.ndarray: drift potential.
    """
    intercept, slope = self.GetCoefficients(time)
    x = numpy.asarray(x, dtype=numpy.float64)
    return intercept * x + 0.5 * slope * x * x

  def GetVelocity(self, x, time=0.0):
    """Evaluates the drift.

    Args:
      x (numpy.ndarray|float): positions.
      time (Optional[float]): time.

    Returns:
      numpy.ndarray: drift.
    """
    intercept, slope = self.GetCoefficients(time)
    return intercept + slope * numpy.asarray(x, dtype=numpy.float64)

  def GetVelocityDerivative(self, x, time=0.0):
    """Evaluates the spatial derivative of the drift.

    Args:
      x (numpy.ndarray|float): positions.
      time (Optional[float]): time.

    Returns:
      numpy.ndarray: drift derivative.
    """
    _, slope = self.GetCoefficients(time)
    return numpy.full(numpy.shape(x), slope, dtype=numpy.float64)


class CoherentDrift(LinearDrift):
  """Drift of a coherent packet a omega (cos wt - sin wt) - omega x."""

  def __init__(self, amplitude, parameters):
    """Initializes a coherent packet drift.

    Args:
      amplitude (float): initial displacement a.
      parameters (OscillatorParameters): oscillator parameters.
    """
    frequency = parameters.frequency
    super(CoherentDrift, self).__init__(
        self._GetIntercept, -frequency, frequency=frequency,
        length_scale=parameters.sigma0)
    self._amplitude = amplitude
    self._frequency = frequency

  def _GetIntercept(self, time):
    """Retrieves the drift intercept.

    Args:
      time (float): time.

    Returns:
      float: intercept A.
    """
    phase = self._frequency * time
    return self._amplitude * self._frequency * (
        math.cos(phase) - math.sin(phase))


class SwitchedCoherentDrift(LinearDrift):
  """Coherent packet drift with the oscillation switched off by F(t)."""

  def __init__(self, amplitude, parameters, switch):
    """Initializes a switched coherent packet drift.

    Args:
      amplitude (float): initial displacement a.
      parameters (OscillatorParameters): oscillator parameters.
      switch (SwitchFunction): switch function F.
    """
    frequency = parameters.frequency
    super(SwitchedCoherentDrift, self).__init__(
        self._GetIntercept, -frequency, frequency=frequency,
        length_scale=parameters.sigma0)
    self._amplitude = amplitude
    self._frequency = frequency
    self._switch = switch

  def _GetIntercept(self, time):
    """Retrieves the drift intercept.

    Args:
      time (float): time.

    Returns:
      float: intercept A.
    """
    phase = self._frequency * time
    return self._amplitude * self._frequency * (
        math.cos(phase) - math.sin(phase)) * self._switch.GetValue(time)


class CallableDrift(DriftField):
  """Drift defined by functions of position and time."""

  def __init__(
      self, velocity, derivative=None, potential=None, singularities=None,
      is_time_dependent=False, frequency=None, length_scale=1.0):
    """Initializes a drift defined by functions.

    Args:
      velocity (callable): drift function of position and time.
      derivative (Optional[callable]): drift derivative function of position
          and time.
      potential (Optional[callable]): drift potential function of position
          and time.
      singularities (Optional[list[float]]): sorted singular points or None
          if not known analytically.
      is_time_dependent (Optional[bool]): True if the drift depends on time.
      frequency (Optional[float]): characteristic frequency of the drift.
      length_scale (Optional[float]): natural length scale of the drift.

    Raises:
      DomainError: if the velocity is not callable.
    """
    if not callable(velocity):
      raise errors.DomainError('Unsupported drift: velocity is not callable.')

    super(CallableDrift, self).__init__(
        singularities=singularities, is_time_dependent=is_time_dependent,
        frequency=frequency, length_scale=length_scale)
    self._derivative = derivative
    self._potential = potential
    self._velocity = velocity
    self.has_potential = potential is not None

  def GetPotential(self, x, time=0.0):
    """Evaluates the drift potential.

    Args:
      x (numpy.ndarray|float): positions.
      time (Optional[float]): time.

    Returns:
      numpy.ndarray: drift potential.

    Raises:
      NotImplementedError: if the drift has no potential.
    """
    if not self._potential:
      raise NotImplementedError()

    return self._potential(numpy.asarray(x, dtype=numpy.float64), time)

  def GetVelocity(self, x, time=0.0):
    """Evaluates the drift.

    Args:
      x (numpy.ndarray|float): positions.
      time (Optional[float]): time.

    Returns:
      numpy.ndarray: drift.
    """
    return self._velocity(numpy.asarray(x, dtype=numpy.float64), time)

  def GetVelocityDerivative(self, x, time=0.0):
    """Evaluates the spatial derivative of the drift.

    Args:
      x (numpy.ndarray|float): positions.
      time (Optional[float]): time.

    Returns:
      numpy.ndarray: drift derivative.
    """
    if not self._derivative:
      return super(CallableDrift, self).GetVelocityDerivative(x, time=time)

    return self._derivative(numpy.asarray(x, dtype=numpy.float64), time)
