# -*- coding: utf-8 -*-
"""The error objects."""


class Error(Exception):
  """The error interface."""


class AccuracyError(Error):
  """Error that is raised when a series or iteration does not converge.

  Attributes:
    partial_value (float): value obtained before the iteration was stopped.
  """

  def __init__(self, message, partial_value=None):
    """Initializes an accuracy error.

    Args:
      message (str): error message.
      partial_value (Optional[float]): value obtained before the iteration
          was stopped.
    """
    super(AccuracyError, self).__init__(message)
    self.partial_value = partial_value


class ConfigurationError(Error):
  """Error that is raised when a scenario configuration is invalid."""


class ConservationError(Error):
  """Error that is raised when probability mass is not conserved."""


class DomainError(Error):
  """Error that is raised when a value lies outside the supported domain."""


class PositivityError(Error):
  """Error that is raised when a density becomes negative."""


class QuadratureError(Error):
  """Error that is raised when a quadrature loses probability mass."""


class SingularityError(DomainError):
  """Error that is raised when a field is evaluated at a singularity.

  Attributes:
    node (float): position of the singularity or None if not known.
  """

  def __init__(self, message, node=None):
    """Initializes a singularity error.

    Args:
      message (str): error message.
      node (Optional[float]): position of the singularity.
    """
    super(SingularityError, self).__init__(message)
    self.node = node
