"""
Immaculate Hecke Toolkit - Validation Utilities
"""
import re
from typing import Optional, Tuple


class Validator:
    """Input validation utilities"""

    @staticmethod
    def validate_positive_int(token: str, field_name: str = "Value") -> Tuple[bool, Optional[str]]:
        """Validate a single positive integer token"""
        token = (token or '').strip()
        if not token:
            return False, f"{field_name} is required"
        if not re.match(r'^\d+$', token):
            return False, f"{field_name}: '{token}' is not a positive integer"
        if int(token) < 1:
            return False, f"{field_name}: '{token}' must be at least 1"
        return True, None

    @staticmethod
    def validate_shape(text: str) -> Tuple[bool, Optional[str]]:
        """
        Validate composition text such as "2,2,3"
        Returns (is_valid, error_message)
        """
        if not text or not text.strip():
            return False, "Shape is required"

        for token in text.split(','):
            is_valid, error = Validator.validate_positive_int(token, "Shape part")
            if not is_valid:
                return False, error

        return True, None

    @staticmethod
    def validate_subset(text: str) -> Tuple[bool, Optional[str]]:
        """Validate subset text such as "{2,4}" or "{}" """
        if not text:
            return False, "Subset is required"

        stripped = text.strip()
        if not (stripped.startswith('{') and stripped.endswith('}')):
            return False, f"Subset '{text}' must be written in braces, e.g. {{2,4}}"

        body = stripped[1:-1].strip()
        if not body:
            return True, None

        for token in body.split(','):
            is_valid, error = Validator.validate_positive_int(token, "Subset element")
            if not is_valid:
                return False, error

        return True, None

    @staticmethod
    def validate_tableau(text: str) -> Tuple[bool, Optional[str]]:
        """Validate tableau text: rows bottom to top separated by ';', entries by ','"""
        if not text or not text.strip():
            return False, "Tableau is required"

        for index, row in enumerate(text.split(';'), start=1):
            if not row.strip():
                return False, f"Row {index} of tableau '{text}' is empty"
            for token in row.split(','):
                is_valid, error = Validator.validate_positive_int(token, f"Tableau row {index}")
                if not is_valid:
                    return False, error

        return True, None

    @staticmethod
    def validate_word(text: str) -> Tuple[bool, Optional[str]]:
        """Validate a space-separated Hecke word; the empty word is allowed"""
        if text is None:
            return False, "Word is required"

        for token in text.split():
            is_valid, error = Validator.validate_positive_int(token, "Generator")
            if not is_valid:
                return False, error

        return True, None

    @staticmethod
    def validate_variable_count(m, n: Optional[int] = None) -> Tuple[bool, Optional[str]]:
        """Validate the number of variables used in polynomial checks"""
        if m is None:
            return True, None
        if not isinstance(m, int) or m < 1:
            return False, f"Variable count '{m}' must be a positive integer"
        if n is not None and m < n:
            return False, f"Variable count {m} is smaller than the degree {n}"
        return True, None


# Create validator instance
validator = Validator()
