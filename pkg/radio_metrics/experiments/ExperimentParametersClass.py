'''
ExperimentParametersClass.py: Contains the ExperimentParameters Class.

Purpose: Bundles all relevant parameters into an object that can be written to a file.
'''

# Python imports.
from collections import defaultdict


class ExperimentParameters(object):
    '''
    Parameters object given to @ExperimentClass instances.
    Used for storing all relevant experiment info for reproducibility.
    '''

    def __init__(self, params=None):
        self.params = params if params is not None else defaultdict(lambda: None)

    def __str__(self):
        '''
        Summary:
            Creates a str where each key-value (parameterName-value)
            appears on a line, nested sections indented one level further.
        '''
        result = ""
        for key in sorted(self.params):
            value = self.params[key]
            if isinstance(value, dict):
                result += "\n\t" + str(key) + " :"
                for sub_key in sorted(value):
                    result += "\n\t\t" + str(sub_key) + " : " + str(value[sub_key])
            else:
                result += "\n\t" + str(key) + " : " + str(value)
        return result
