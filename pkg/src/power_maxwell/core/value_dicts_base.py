"""Merges message dictionaries into one lookup table"""

import inspect
from typing import Dict, Iterable, List, Tuple, Type


class ValueDictsBase(object):
    """Flat key to message table.

    Every non-empty dict attribute of the class (_info, _errors, _titles...) is
    merged, followed by those of each class in value_list. Keys carry a package
    prefix (dist_, est_, sim_...) and must be unique across the merged classes.
    """

    def __init__(self, value_list: Iterable[Type["ValueDictsBase"]] = None):
        dictionaries = self.get_dicts()
        for values in value_list or ():
            dictionaries += values.get_dicts()

        self.all: Dict[str, str] = {}
        for name, dictionary in dictionaries:
            repeated = self.all.keys() & dictionary.keys()
            if repeated:
                raise KeyError(f"Literal keys defined twice ({name}): {sorted(repeated)}")
            self.all.update(dictionary)

    def get(self, key: str, **kwargs) -> str:
        """The message of key, with its placeholders filled from kwargs when any are given."""

        value = str(self.all[key])
        return value.format(**kwargs) if kwargs else value

    @classmethod
    def get_dicts(cls) -> List[Tuple[str, dict]]:
        members = inspect.getmembers(cls, lambda m: type(m) is dict and len(m) > 0)
        return [(name, member) for name, member in members if not name.startswith("__")]
