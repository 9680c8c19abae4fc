from django.apps import AppConfig


class IntegralsConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "integrals"
    verbose_name = "Integrais G(k, m)"
