from django.apps import AppConfig


class BicrankConfig(AppConfig):
    default_auto_field = "django.db.models.BigAutoField"
    name = "bicrank"
    verbose_name = "Laboratorio de bicrank"
