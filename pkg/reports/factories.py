"""
Factories (factory-boy) para os testes de reports.
"""

import factory

from .models import VerificationRun


class VerificationRunFactory(factory.django.DjangoModelFactory):
    class Meta:
        model = VerificationRun

    suite = 'routes'
    max_order = 2
    mode = 'exact'
    seed = 20240601
    passed = True
    cells = factory.LazyAttribute(lambda run: len(run.report.get('identities', {}).get('routes', [])))
    failed = 0
    report = factory.LazyFunction(lambda: {
        'suite': 'routes',
        'passed': True,
        'identities': {'routes': [{'cell': [1, 1], 'pass': True, 'mode': 'exact'}]},
    })
