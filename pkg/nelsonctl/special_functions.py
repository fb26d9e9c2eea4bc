# -*- coding: utf-8 -*-
"""Hermite polynomials and the confluent hypergeometric function."""

import math

import numpy

from nelsonctl import errors
from nelsonctl import resources


MAXIMUM_HERMITE_DEGREE = 64

_KUMMER_MAXIMUM_NUMBER_OF_TERMS = 500

_KUMMER_RELATIVE_TOLERANCE = 1e-17


def _IsNonPositiveInteger(value):
  """Determines if a value is a non-positive integer.

  Args:
    value (float): value.

  Returns:
    bool: True if the value is 0, -1, -2, ...
  """
  return value <= 0.0 and value == math.floor(value)


def GetHermitePair(degree, x):
  """Evaluates the physicists' Hermite polynomials H_{n-1} and H_n.

  Args:
    degree (int): degree n.
    x (numpy.ndarray|float): arguments.

  Returns:
    tuple[numpy.ndarray, numpy.ndarray]: H_{n-1}(x) and H_n(x), where H_{-1}
        is 0.

  Raises:
    DomainError: if the degree is negative or exceeds the supported maximum.
  """
  if degree < 0 or degree > MAXIMUM_HERMITE_DEGREE:
    raise errors.DomainError(f'Unsupported Hermite degree: {degree:d}')

  x = numpy.asarray(x, dtype=numpy.float64)
  previous = numpy.zeros(x.shape)
  current = numpy.ones(x.shape)
  for index in range(degree):
    previous, current = current, 2.0 * x * current - 2.0 * index * previous

  return previous, current


def Hermite(degree, x):
  """Evaluates the physicists' Hermite polynomial H_n.

  Uses the recurrence H_{n+1} = 2x H_n - 2n H_{n-1}.

  Args:
    degree (int): degree n.
    x (numpy.ndarray|float): arguments.

  Returns:
    numpy.ndarray|float: H_n(x), a float for a scalar argument.

  Raises:
    DomainError: if the degree is negative or exceeds the supported maximum.
  """
  _, value = GetHermitePair(degree, x)
  if numpy.ndim(x) == 0:
    return float(value)

  return value


def _SumKummerSeries(a, b, z):
  """Sums the Kummer series.

  Args:
    a (float): numerator parameter.
    b (float): denominator parameter.
    z (float): argument.

  Returns:
    tuple[float, float]: sum and estimated absolute error.

  Raises:
    AccuracyError: if the series does not converge.
  """
  term = 1.0
  value = 1.0
  absolute_sum = 1.0
  for index in range(_KUMMER_MAXIMUM_NUMBER_OF_TERMS):
    term *= (a + index) / (b + index) * z / (index + 1)
    value += term
    absolute_sum += abs(term)

    if term == 0.0:
      return value, 2.0 * numpy.finfo(float).eps * absolute_sum

    if (abs(term) < _KUMMER_RELATIVE_TOLERANCE * abs(value) and
        index + 1 > abs(z)):
      estimated_error = abs(term) + 2.0 * numpy.finfo(float).eps * absolute_sum
      return value, estimated_error

  raise errors.AccuracyError((
      f'Kummer series M({a:.12g}, {b:.12g}; {z:.12g}) did not converge '
      f'within {_KUMMER_MAXIMUM_NUMBER_OF_TERMS:d} terms'),
      partial_value=value)


def KummerM(a, b, z):
  """Evaluates the confluent hypergeometric function M(a, b; z).

  For negative z the Kummer transformation e^z M(b - a, b; -z) is summed
  unless the series terminates.

  Args:
    a (float): numerator parameter.
    b (float): denominator parameter.
    z (float): argument.

  Returns:
    EvaluationResult: value and estimated absolute error.

  Raises:
    AccuracyError: if the series does not converge.
    DomainError: if b is a non-positive integer.
  """
  if _IsNonPositiveInteger(b):
    raise errors.DomainError(f'Unsupported denominator parameter: {b:.12g}')

  if z == 0.0:
    return resources.EvaluationResult(1.0, 0.0)

  if z > 0.0 or _IsNonPositiveInteger(a):
    value, estimated_error = _SumKummerSeries(a, b, z)
    return resources.EvaluationResult(value, estimated_error)

  try:
    value, estimated_error = _SumKummerSeries(b - a, b, -z)
  except errors.AccuracyError as exception:
    raise errors.AccuracyError(
        str(exception), partial_value=math.exp(z) * exception.partial_value)

  scale = math.exp(z)
  return resources.EvaluationResult(scale * value, scale * estimated_error)
