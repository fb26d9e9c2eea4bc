# -*- coding: utf-8 -*-
"""Writer of scenario artifacts."""

import hashlib
import json
import logging
import os

import numpy
import scipy
import yaml

import nelsonctl

from nelsonctl import definitions


class OutputWriter(object):
  """Writer of scenario artifacts.

  Tables are written as CSV files with "#" prefixed metadata lines followed by
  a column name row. Every written artifact is recorded in the manifest.

  Attributes:
    artifacts (dict[str, str]): SHA-256 checksum per artifact filename.
    path (str): path of the output directory.
  """

  _MANIFEST_FILENAME = 'manifest.json'

  _VALUE_FORMAT = '{0:.12g}'

  def __init__(self, path):
    """Initializes an output writer.

    Args:
      path (str): path of the output directory.
    """
    super(OutputWriter, self).__init__()
    self.artifacts = {}
    self.path = path

  def _FormatMetadataValue(self, value):
    """Formats a metadata value.

    Args:
      value (object): metadata value.

    Returns:
      str: formatted metadata value.
    """
    if isinstance(value, bool) or value is None:
      return f'{value!s}'

    if isinstance(value, (float, int, numpy.floating, numpy.integer)):
      return self._VALUE_FORMAT.format(value)

    if isinstance(value, (list, tuple)):
      formatted_values = ', '.join([
          self._FormatMetadataValue(element) for element in value])
      return f'[{formatted_values:s}]'

    return f'{value!s}'

  def _WriteArtifact(self, filename, data):
    """Writes an artifact and records its checksum.

    Args:
      filename (str): name of the artifact file.
      data (bytes): contents of the artifact.

    Returns:
      str: path of the artifact.
    """
    if not os.path.isdir(self.path):
      os.makedirs(self.path)

    path = os.path.join(self.path, filename)
    with open(path, 'wb') as file_object:
      file_object.write(data)

    self.artifacts[filename] = hashlib.sha256(data).hexdigest()
    logging.info(f'Wrote: {path:s}')

    return path

  def GetJSONData(self, values):
    """Serializes values to JSON.

    Args:
      values (dict[str, object]): values.

    Returns:
      bytes: UTF-8 encoded JSON with sorted keys.
    """
    json_string = json.dumps(
        values, allow_nan=True, indent=2, sort_keys=True)
    return f'{json_string:s}\n'.encode('utf-8')

  def GetVersions(self):
    """Retrieves the versions of the packages used to compute the artifacts.

    Returns:
      dict[str, str]: version per package name.
    """
    return {
        'nelsonctl': nelsonctl.__version__,
        'numpy': numpy.__version__,
        'scipy': scipy.__version__,
        'yaml': yaml.__version__}

  def WriteJSON(self, filename, values):
    """Writes a JSON artifact.

    Args:
      filename (str): name of the artifact file.
      values (dict[str, object]): values.

    Returns:
      str: path of the artifact.
    """
    return self._WriteArtifact(filename, self.GetJSONData(values))

  def WriteManifest(self, configuration):
    """Writes the manifest of the artifacts written so far.

    Args:
      configuration (dict[str, object]): scenario configuration to echo.

    Returns:
      str: path of the manifest.
    """
    artifacts = [
        {'filename': filename, 'sha256': checksum}
        for filename, checksum in sorted(self.artifacts.items())]

    manifest = {
        'artifacts': artifacts,
        'configuration': configuration,
        'versions': self.GetVersions()}

    path = os.path.join(self.path, self._MANIFEST_FILENAME)
    data = self.GetJSONData(manifest)
    with open(path, 'wb') as file_object:
      file_object.write(data)

    logging.info(f'Wrote: {path:s}')

    return path

  def WriteTable(
      self, filename, scenario, formula, column_names, columns,
      metadata=None):
    """Writes a table as a CSV artifact.

    Args:
      filename (str): name of the artifact file.
      scenario (str): name of the scenario.
      formula (str): name of the formula in definitions.FORMULA_DESCRIPTIONS
          the table instantiates.
      column_names (list[str]): names of the columns.
      columns (list[numpy.ndarray]): values per column, of equal size.
      metadata (Optional[dict[str, object]]): additional metadata.

    Returns:
      str: path of the artifact.

    Raises:
      ValueError: if the number of column names or column sizes do not match.
    """
    columns = [numpy.ravel(numpy.asarray(column)) for column in columns]
    if len(columns) != len(column_names):
      raise ValueError('Number of columns does not match column names.')

    if len({column.size for column in columns}) > 1:
      raise ValueError('Columns of different sizes.')

    formula_description = definitions.FORMULA_DESCRIPTIONS[formula]

    lines = [
        f'# scenario: {scenario:s}',
        f'# formula: {formula_description:s}']

    for key, value in sorted((metadata or {}).items()):
      formatted_value = self._FormatMetadataValue(value)
      lines.append(f'# {key:s}: {formatted_value:s}')

    lines.append(','.join(column_names))

    for row in zip(*columns):
      lines.append(','.join([
          self._VALUE_FORMAT.format(value) for value in row]))

    lines.append('')
    data = '\n'.join(lines).encode('utf-8')

    return self._WriteArtifact(filename, data)
