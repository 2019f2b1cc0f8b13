from .pool import parallel_map as parallel_map
from .serialize import ReportModel as ReportModel
from .serialize import csv_header as csv_header
from .serialize import dumps as dumps
from .serialize import read_csv as read_csv
from .serialize import write_csv as write_csv
from .utils import get_path as get_path
from .utils import load_data as load_data
